#include "legvar/subspace.hpp"

namespace legvar {

LinSubspace LinSubspace::from_spanning(int ambient_dim, const std::vector<RatVec>& rows) {
    RatMatrix m((int)rows.size(), ambient_dim);
    for (int i = 0; i < (int)rows.size(); ++i) {
        if ((int)rows[(size_t)i].size() != ambient_dim)
            throw PreconditionError("LinSubspace: row length mismatch");
        for (int j = 0; j < ambient_dim; ++j) m(i, j) = rows[(size_t)i][(size_t)j];
    }
    auto pivots = rref_inplace(m);
    LinSubspace s(ambient_dim);
    RatMatrix b((int)pivots.size(), ambient_dim);
    for (int i = 0; i < (int)pivots.size(); ++i)
        for (int j = 0; j < ambient_dim; ++j) b(i, j) = m(i, j);
    s.basis_ = std::move(b);
    return s;
}

LinSubspace LinSubspace::from_rref(int ambient_dim, RatMatrix rref_rows) {
    if (rref_rows.cols() != ambient_dim)
        throw PreconditionError("LinSubspace: basis width mismatch");
    LinSubspace s(ambient_dim);
    s.basis_ = std::move(rref_rows);
    return s;
}

bool LinSubspace::contains(const RatVec& v) const {
    if ((int)v.size() != ambient_)
        throw PreconditionError("LinSubspace::contains: length mismatch");
    RatVec r = v;
    for (int i = 0; i < basis_.rows(); ++i) {
        int lead = -1;
        for (int j = 0; j < ambient_; ++j)
            if (basis_(i, j) != 0) {
                lead = j;
                break;
            }
        if (lead < 0) continue;
        if (r[(size_t)lead] == 0) continue;
        Rat f = r[(size_t)lead] / basis_(i, lead);
        for (int j = lead; j < ambient_; ++j) r[(size_t)j] -= f * basis_(i, j);
    }
    return is_zero(r);
}

bool LinSubspace::contains(const LinSubspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

} // namespace legvar
