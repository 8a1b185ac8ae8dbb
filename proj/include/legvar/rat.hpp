#ifndef LEGVAR_RAT_HPP
#define LEGVAR_RAT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "legvar/errors.hpp"

namespace legvar {

using Int = mpz_class;

/// Exact rational scalar. Arithmetic through mpq_class keeps values in
/// lowest terms with positive denominator.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw PreconditionError("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw PreconditionError("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// "p" for integers, "p/q" otherwise; GMP canonical form (q > 0).
inline std::string rat_str(const Rat& q) { return q.get_str(); }

/// Parses "p", "p/q", or decimal strings produced by rat_str.
inline Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw PreconditionError("rat_parse: bad rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

using RatVec = std::vector<Rat>;

inline bool is_zero(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace legvar

#endif
