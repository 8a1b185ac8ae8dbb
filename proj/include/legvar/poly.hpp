#ifndef LEGVAR_POLY_HPP
#define LEGVAR_POLY_HPP

#include <map>
#include <optional>
#include <vector>

#include "legvar/rat.hpp"

namespace legvar {

/// Exponent vector; length equals the polynomial arity.
using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

/// Graded lexicographic order: total degree first, then lex on exponents.
struct GradedLexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

/// Exact multivariate polynomial over Rat with graded-lex canonical term
/// order. Zero coefficients are never stored.
class MPoly {
public:
    using TermMap = std::map<Mono, Rat, GradedLexLess>;

    MPoly() : arity_(0) {}
    explicit MPoly(int arity) : arity_(arity) {}

    static MPoly constant(int arity, const Rat& c) {
        MPoly p(arity);
        if (c != 0) p.terms_[Mono((size_t)arity, 0)] = c;
        return p;
    }

    static MPoly variable(int arity, int var) {
        check_var(arity, var);
        MPoly p(arity);
        Mono m((size_t)arity, 0);
        m[(size_t)var] = 1;
        p.terms_[m] = 1;
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
        return d;
    }

    /// Degree of the lowest-degree term, or -1 for the zero polynomial.
    int low_degree() const {
        if (terms_.empty()) return -1;
        return mono_degree(terms_.begin()->first);
    }

    bool is_homogeneous(int deg) const {
        for (const auto& [m, c] : terms_)
            if (mono_degree(m) != deg) return false;
        return true;
    }

    Rat coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Mono& m, const Rat& c) {
        if ((int)m.size() != arity_)
            throw PreconditionError("MPoly: exponent vector length mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(arity_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    MPoly& operator+=(const MPoly& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    MPoly& operator-=(const MPoly& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const Rat& c, const MPoly& p);

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    /// Exact partial derivative.
    MPoly derivative(int var) const;

    /// Iterated derivative, one order per listed variable.
    MPoly derivative(const std::vector<int>& vars) const;

    Rat eval(const RatVec& point) const;

    /// Substitutes images[i] for variable i; images share one common arity.
    MPoly compose(const std::vector<MPoly>& images) const;

    /// Sum of the terms of total degree exactly d.
    MPoly homogeneous_part(int d) const;

    /// Sum of the terms of total degree > d.
    MPoly truncate_below(int d) const;

    MPoly pow(int e) const;

private:
    static void check_var(int arity, int var) {
        if (var < 0 || var >= arity)
            throw PreconditionError("MPoly: variable index out of range");
    }
    void check_arity(const MPoly& o) const {
        if (arity_ != o.arity_) throw PreconditionError("MPoly: arity mismatch");
    }

    int arity_;
    TermMap terms_;
};

} // namespace legvar

#endif
