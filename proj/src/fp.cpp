#include "legvar/fp.hpp"

#include <mutex>

namespace legvar {

uint64_t fp_inv(uint64_t a, uint64_t p) {
    // extended Euclid on signed 128-bit to stay safe for p near 2^63
    __int128 t = 0, new_t = 1;
    __int128 r = (__int128)p, new_r = (__int128)(a % p);
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw ComputationError("fp_inv: not invertible");
    if (t < 0) t += p;
    return (uint64_t)t;
}

uint64_t fp_of_int(const Int& z, uint64_t p) {
    return mpz_fdiv_ui(z.get_mpz_t(), p);
}

std::vector<uint64_t> modular_primes(std::size_t count) {
    static std::mutex mu;
    static std::vector<uint64_t> cache;
    std::lock_guard<std::mutex> lk(mu);
    if (cache.size() < count) {
        Int p = cache.empty() ? Int(1) << 62 : Int(cache.back());
        while (cache.size() < count) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            cache.push_back(p.get_ui());
        }
    }
    return std::vector<uint64_t>(cache.begin(), cache.begin() + count);
}

void crt_combine(Int& value, Int& modulus, uint64_t residue, uint64_t p) {
    // x = value + modulus * ((residue - value) / modulus mod p)
    uint64_t vp = fp_of_int(value, p);
    uint64_t mp = fp_of_int(modulus, p);
    uint64_t delta = fp_mul(fp_sub(residue % p, vp, p), fp_inv(mp, p), p);
    value += modulus * Int(delta);
    modulus *= Int(p);
}

bool rational_reconstruct(const Int& residue, const Int& modulus, Rat& out) {
    Int bound;
    mpz_fdiv_q_ui(bound.get_mpz_t(), modulus.get_mpz_t(), 2);
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());

    Int r0 = modulus, r1 = residue % modulus;
    if (r1 < 0) r1 += modulus;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return false;
    Int num = r1, den = t1;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den > bound) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) {
        num /= g;
        den /= g;
    }
    // the candidate must actually reduce to the residue
    Int check = num - residue * den;
    if (check % modulus != 0) return false;
    out = make_rat(num, den);
    return true;
}

} // namespace legvar
