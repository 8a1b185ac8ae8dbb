#ifndef LEGVAR_SUBSPACE_HPP
#define LEGVAR_SUBSPACE_HPP

#include "legvar/matrix.hpp"

namespace legvar {

/// Linear subspace of Q^n in canonical form: the stored basis is the reduced
/// row echelon form of any spanning set, so equal subspaces compare equal.
class LinSubspace {
public:
    LinSubspace() : ambient_(0) {}
    explicit LinSubspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    /// Canonicalizes the given spanning rows.
    static LinSubspace from_spanning(int ambient_dim, const std::vector<RatVec>& rows);

    /// Rows are already reduced echelon (trusted, e.g. reconstructed and verified).
    static LinSubspace from_rref(int ambient_dim, RatMatrix rref_rows);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }

    RatVec basis_vector(int i) const {
        RatVec v((size_t)ambient_);
        for (int j = 0; j < ambient_; ++j) v[(size_t)j] = basis_(i, j);
        return v;
    }

    bool contains(const RatVec& v) const;
    bool contains(const LinSubspace& other) const;

    friend bool operator==(const LinSubspace& a, const LinSubspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    int ambient_;
    RatMatrix basis_;
};

} // namespace legvar

#endif
