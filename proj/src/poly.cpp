#include "legvar/poly.hpp"

namespace legvar {

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.arity_ != b.arity_) throw PreconditionError("MPoly: arity mismatch");
    MPoly r(a.arity_);
    Mono m((size_t)a.arity_, 0);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MPoly operator*(const Rat& c, const MPoly& p) {
    MPoly r(p.arity_);
    if (c == 0) return r;
    for (const auto& [m, k] : p.terms_) r.terms_[m] = c * k;
    return r;
}

MPoly MPoly::derivative(int var) const {
    check_var(arity_, var);
    MPoly r(arity_);
    for (const auto& [m, c] : terms_) {
        int e = m[(size_t)var];
        if (e == 0) continue;
        Mono d = m;
        d[(size_t)var] = e - 1;
        r.terms_[d] = c * e;
    }
    return r;
}

MPoly MPoly::derivative(const std::vector<int>& vars) const {
    MPoly r = *this;
    for (int v : vars) r = r.derivative(v);
    return r;
}

Rat MPoly::eval(const RatVec& point) const {
    if ((int)point.size() != arity_)
        throw PreconditionError("MPoly::eval: point length mismatch");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
    if ((int)images.size() != arity_)
        throw PreconditionError("MPoly::compose: image count mismatch");
    int out_arity = arity_ == 0 ? 0 : images[0].arity();
    for (const MPoly& im : images)
        if (im.arity() != out_arity)
            throw PreconditionError("MPoly::compose: images disagree on arity");

    // cache of images[i]^e, filled on demand
    std::vector<std::vector<MPoly>> powers((size_t)arity_);
    auto power = [&](int var, int e) -> const MPoly& {
        auto& cache = powers[(size_t)var];
        if (cache.empty()) cache.push_back(MPoly::constant(out_arity, 1));
        while ((int)cache.size() <= e) cache.push_back(cache.back() * images[(size_t)var]);
        return cache[(size_t)e];
    };

    MPoly r(out_arity);
    for (const auto& [m, c] : terms_) {
        MPoly t = MPoly::constant(out_arity, c);
        for (int i = 0; i < arity_; ++i)
            if (m[(size_t)i] > 0) t = t * power(i, m[(size_t)i]);
        r += t;
    }
    return r;
}

MPoly MPoly::homogeneous_part(int d) const {
    MPoly r(arity_);
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) == d) r.terms_[m] = c;
    return r;
}

MPoly MPoly::truncate_below(int d) const {
    MPoly r(arity_);
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) > d) r.terms_[m] = c;
    return r;
}

MPoly MPoly::pow(int e) const {
    if (e < 0) throw PreconditionError("MPoly::pow: negative exponent");
    MPoly r = MPoly::constant(arity_, 1);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

} // namespace legvar
