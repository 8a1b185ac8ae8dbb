#ifndef LEGVAR_KERNEL_HPP
#define LEGVAR_KERNEL_HPP

#include <optional>
#include <string>

#include "legvar/matrix.hpp"
#include "legvar/subspace.hpp"

namespace legvar {

struct KernelOptions {
    enum class Path { Auto, Bareiss, Modular };
    Path path = Path::Auto;
    std::size_t initial_primes = 16;
    std::size_t max_primes = 256;
    int threads = 0; // 0 = hardware concurrency

    static KernelOptions bareiss() { return {Path::Bareiss}; }
    static KernelOptions modular() { return {Path::Modular}; }
};

struct KernelStats {
    std::string path_used;
    std::size_t primes_used = 0;
    int rank = 0;
};

/// Exact null space, canonical (reduced echelon) basis. Two implementations
/// behind one call: fraction-free Bareiss elimination, and multi-prime
/// modular elimination with CRT + rational reconstruction, the result of
/// which is verified exactly against the input before it is returned.
LinSubspace kernel_basis(const SparseRatMatrix& m, const KernelOptions& opts = {},
                         KernelStats* stats = nullptr);
LinSubspace kernel_basis(const RatMatrix& m, const KernelOptions& opts = {},
                         KernelStats* stats = nullptr);

/// Exact solution of A x = b with free variables set to zero;
/// nullopt when the system is inconsistent.
std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b);

} // namespace legvar

#endif
