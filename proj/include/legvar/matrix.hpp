#ifndef LEGVAR_MATRIX_HPP
#define LEGVAR_MATRIX_HPP

#include <utility>
#include <vector>

#include "legvar/rat.hpp"

namespace legvar {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_((size_t)rows * (size_t)cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[(size_t)i * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[(size_t)i * cols_ + j]; }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c)
            std::swap((*this)(i, c), (*this)(j, c));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("Matrix: size mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw PreconditionError("Matrix: size mismatch in sum");
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw PreconditionError("Matrix: size mismatch in difference");
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    friend Matrix operator*(const T& c, const Matrix& m) {
        Matrix r = m;
        for (auto& x : r.data_) x = c * x;
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if ((int)v.size() != cols_) throw PreconditionError("Matrix: vector length mismatch");
        std::vector<T> r((size_t)rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != T(0)) r[(size_t)i] += (*this)(i, j) * v[(size_t)j];
        return r;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != T(0)) return false;
        return true;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;

/// Sparse row: (column, value) pairs with strictly increasing columns.
struct SparseRow {
    std::vector<std::pair<int, Rat>> entries;

    void add(int col, const Rat& v) {
        if (v != 0) entries.emplace_back(col, v);
    }
};

/// Tall sparse constraint matrix for the kernel solvers.
struct SparseRatMatrix {
    int cols = 0;
    std::vector<SparseRow> rows;

    void add_row(SparseRow r) {
        if (!r.entries.empty()) rows.push_back(std::move(r));
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& r : rows) n += r.entries.size();
        return n;
    }
};

SparseRatMatrix to_sparse(const RatMatrix& m);
RatMatrix to_dense(const SparseRatMatrix& m);

/// In-place reduced row echelon form over Rat; returns the pivot columns.
std::vector<int> rref_inplace(RatMatrix& m);

int rank(const RatMatrix& m);
Rat det(const RatMatrix& m);

/// Inverse of a square nonsingular matrix; PreconditionError when singular.
RatMatrix inverse(const RatMatrix& m);

} // namespace legvar

#endif
