#ifndef LEGVAR_RNG_HPP
#define LEGVAR_RNG_HPP

#include <cstdint>

#include "legvar/rat.hpp"

namespace legvar {

/// SplitMix64. Deterministic across platforms, which keeps randomized
/// checks and reports byte-for-byte reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    uint64_t below(uint64_t n) { return next() % n; }

    /// Integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + (long)below((uint64_t)(hi - lo + 1));
    }

    /// Small rational with numerator in [-bound, bound] and denominator in [1, den_bound].
    Rat rat(long bound = 9, long den_bound = 4) {
        return make_rat(range(-bound, bound), range(1, den_bound));
    }

    /// Small nonzero rational.
    Rat nonzero_rat(long bound = 9, long den_bound = 4) {
        Rat q = rat(bound, den_bound);
        while (q == 0) q = rat(bound, den_bound);
        return q;
    }

    RatVec rat_vec(int len, long bound = 9, long den_bound = 4) {
        RatVec v((size_t)len);
        for (auto& x : v) x = rat(bound, den_bound);
        return v;
    }

    RatVec nonzero_rat_vec(int len, long bound = 9, long den_bound = 4) {
        RatVec v((size_t)len);
        for (auto& x : v) x = nonzero_rat(bound, den_bound);
        return v;
    }

private:
    uint64_t state_;
};

} // namespace legvar

#endif
