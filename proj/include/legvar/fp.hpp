#ifndef LEGVAR_FP_HPP
#define LEGVAR_FP_HPP

#include <cstdint>
#include <vector>

#include "legvar/rat.hpp"

namespace legvar {

// Arithmetic in Z/p for word-size primes (p < 2^63), used by the modular
// kernel path. Products go through unsigned __int128.

inline uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

inline uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

inline uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p) {
    return (uint64_t)((unsigned __int128)a * b % p);
}

uint64_t fp_inv(uint64_t a, uint64_t p);

/// Residue of an exact integer, in [0, p).
uint64_t fp_of_int(const Int& z, uint64_t p);

/// First `count` primes of the deterministic list starting just above 2^62.
std::vector<uint64_t> modular_primes(std::size_t count);

/// Chinese remainder combination: x ≡ value (mod modulus), x ≡ residue (mod p).
/// Updates value/modulus in place; value stays in [0, modulus).
void crt_combine(Int& value, Int& modulus, uint64_t residue, uint64_t p);

/// Rational reconstruction of residue mod modulus with the symmetric bound
/// |num|, den <= sqrt(modulus/2). Returns false when no candidate exists.
bool rational_reconstruct(const Int& residue, const Int& modulus, Rat& out);

} // namespace legvar

#endif
