#include "legvar/matrix.hpp"

namespace legvar {

SparseRatMatrix to_sparse(const RatMatrix& m) {
    SparseRatMatrix s;
    s.cols = m.cols();
    for (int i = 0; i < m.rows(); ++i) {
        SparseRow r;
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) r.entries.emplace_back(j, m(i, j));
        s.rows.push_back(std::move(r)); // keep zero rows: row count is part of the matrix
    }
    return s;
}

RatMatrix to_dense(const SparseRatMatrix& m) {
    RatMatrix d((int)m.rows.size(), m.cols);
    for (int i = 0; i < (int)m.rows.size(); ++i)
        for (const auto& [c, v] : m.rows[(size_t)i].entries) d(i, c) = v;
    return d;
}

std::vector<int> rref_inplace(RatMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row) m.swap_rows(p, row);
        Rat inv = 1 / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const RatMatrix& m) {
    RatMatrix c = m;
    return (int)rref_inplace(c).size();
}

Rat det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("det: matrix not square");
    RatMatrix a = m;
    int n = a.rows();
    Rat d(1);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != col) {
            a.swap_rows(p, col);
            d = -d;
        }
        d *= a(col, col);
        Rat inv = 1 / a(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            Rat f = a(i, col) * inv;
            for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return d;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("inverse: matrix not square");
    int n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref_inplace(aug);
    if ((int)pivots.size() != n || pivots.back() != n - 1)
        throw PreconditionError("inverse: singular matrix");
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

} // namespace legvar
