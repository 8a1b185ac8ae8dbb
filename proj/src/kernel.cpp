#include "legvar/kernel.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <tuple>

#include "legvar/fp.hpp"

namespace legvar {
namespace {

using IntRow = std::vector<std::pair<int, Int>>;

// Scale each row to coprime integers with positive leading coefficient,
// drop empty rows, sort and deduplicate. None of this changes the kernel.
std::vector<IntRow> normalized_integer_rows(const SparseRatMatrix& m) {
    std::vector<IntRow> rows;
    rows.reserve(m.rows.size());
    for (const auto& r : m.rows) {
        if (r.entries.empty()) continue;
        Int lcm(1);
        for (const auto& [c, v] : r.entries)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
        IntRow row;
        row.reserve(r.entries.size());
        Int gcd(0);
        for (const auto& [c, v] : r.entries) {
            Int z = Int(v.get_num()) * (lcm / Int(v.get_den()));
            if (z == 0) continue;
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), z.get_mpz_t());
            row.emplace_back(c, z);
        }
        if (row.empty()) continue;
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (row.front().second < 0) gcd = -gcd;
        for (auto& [c, z] : row) z /= gcd;
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

LinSubspace canonical_kernel_from_vectors(int cols, std::vector<RatVec> vecs) {
    return LinSubspace::from_spanning(cols, vecs);
}

// ---------------------------------------------------------------------------
// Fraction-free (Bareiss) path

struct EchelonInt {
    Matrix<Int> m;
    std::vector<std::pair<int, int>> pivots; // (row, col), cols increasing
};

EchelonInt bareiss_echelon(const std::vector<IntRow>& rows, int cols) {
    EchelonInt e{Matrix<Int>((int)rows.size(), cols), {}};
    for (int i = 0; i < (int)rows.size(); ++i)
        for (const auto& [c, v] : rows[(size_t)i]) e.m(i, c) = v;

    int nrows = e.m.rows();
    Int prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < nrows; ++c) {
        int p = -1;
        for (int i = r; i < nrows; ++i)
            if (e.m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) e.m.swap_rows(p, r);
        const Int piv = e.m(r, c);
        for (int i = r + 1; i < nrows; ++i) {
            const Int mult = e.m(i, c);
            if (mult == 0) {
                // pure rescale step; divisions stay exact (entries are minors)
                for (int j = c + 1; j < cols; ++j) {
                    if (e.m(i, j) == 0) continue;
                    e.m(i, j) *= piv;
                    mpz_divexact(e.m(i, j).get_mpz_t(), e.m(i, j).get_mpz_t(),
                                 prev.get_mpz_t());
                }
                continue;
            }
            for (int j = c + 1; j < cols; ++j) {
                Int t = piv * e.m(i, j) - mult * e.m(r, j);
                if (t != 0)
                    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                e.m(i, j) = t;
            }
            e.m(i, c) = 0;
        }
        e.pivots.emplace_back(r, c);
        prev = piv;
        ++r;
    }
    return e;
}

LinSubspace kernel_bareiss(const std::vector<IntRow>& rows, int cols, KernelStats* stats) {
    EchelonInt e = bareiss_echelon(rows, cols);
    const int rank = (int)e.pivots.size();
    if (stats) {
        stats->path_used = "bareiss";
        stats->rank = rank;
    }

    std::vector<bool> is_pivot((size_t)cols, false);
    for (auto& [r, c] : e.pivots) is_pivot[(size_t)c] = true;

    std::vector<RatVec> kernel;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[(size_t)fc]) continue;
        RatVec v((size_t)cols, Rat(0));
        v[(size_t)fc] = 1;
        for (int k = rank - 1; k >= 0; --k) {
            auto [pr, pc] = e.pivots[(size_t)k];
            Rat acc(0);
            for (int j = pc + 1; j < cols; ++j)
                if (e.m(pr, j) != 0 && v[(size_t)j] != 0)
                    acc += Rat(e.m(pr, j)) * v[(size_t)j];
            v[(size_t)pc] = -acc / Rat(e.m(pr, pc));
        }
        kernel.push_back(std::move(v));
    }
    return canonical_kernel_from_vectors(cols, std::move(kernel));
}

// ---------------------------------------------------------------------------
// Modular path

struct PrimeKernel {
    uint64_t p = 0;
    int rank = 0;
    std::vector<int> pivot_cols;
    std::vector<int> kernel_pivot_cols;
    // canonical kernel basis mod p, dense d x cols
    std::vector<std::vector<uint64_t>> kernel_rref;
};

// Plain RREF of a small dense matrix mod p; returns pivot columns.
std::vector<int> fp_rref_dense(std::vector<std::vector<uint64_t>>& m, int cols, uint64_t p) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < (int)m.size(); ++col) {
        int pr = -1;
        for (int i = row; i < (int)m.size(); ++i)
            if (m[(size_t)i][(size_t)col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[(size_t)pr], m[(size_t)row]);
        uint64_t inv = fp_inv(m[(size_t)row][(size_t)col], p);
        for (int j = col; j < cols; ++j)
            m[(size_t)row][(size_t)j] = fp_mul(m[(size_t)row][(size_t)j], inv, p);
        for (int i = 0; i < (int)m.size(); ++i) {
            if (i == row) continue;
            uint64_t f = m[(size_t)i][(size_t)col];
            if (f == 0) continue;
            for (int j = col; j < cols; ++j)
                m[(size_t)i][(size_t)j] =
                    fp_sub(m[(size_t)i][(size_t)j], fp_mul(f, m[(size_t)row][(size_t)j], p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

PrimeKernel solve_prime(const std::vector<IntRow>& rows, int cols, uint64_t p) {
    PrimeKernel out;
    out.p = p;

    // streaming echelon: pivot rows stored dense and normalized to leading 1
    std::vector<int> pivot_of_col((size_t)cols, -1);
    std::vector<std::vector<uint64_t>> pivot_rows;
    std::vector<int> pivot_cols;

    std::vector<uint64_t> tmp((size_t)cols, 0);
    for (const IntRow& row : rows) {
        std::fill(tmp.begin(), tmp.end(), 0);
        bool any = false;
        for (const auto& [c, z] : row) {
            uint64_t r = fp_of_int(z, p);
            tmp[(size_t)c] = r;
            any = any || r != 0;
        }
        if (!any) continue;
        for (int c = 0; c < cols; ++c) {
            uint64_t v = tmp[(size_t)c];
            if (v == 0) continue;
            int pi = pivot_of_col[(size_t)c];
            if (pi < 0) {
                uint64_t inv = fp_inv(v, p);
                for (int j = c; j < cols; ++j)
                    tmp[(size_t)j] = fp_mul(tmp[(size_t)j], inv, p);
                pivot_of_col[(size_t)c] = (int)pivot_rows.size();
                pivot_rows.push_back(tmp);
                pivot_cols.push_back(c);
                break;
            }
            const auto& prow = pivot_rows[(size_t)pi];
            for (int j = c; j < cols; ++j)
                if (prow[(size_t)j] != 0)
                    tmp[(size_t)j] = fp_sub(tmp[(size_t)j], fp_mul(v, prow[(size_t)j], p), p);
        }
    }

    // sort pivot rows by pivot column (insertion order is not sorted in general)
    std::vector<int> order((size_t)pivot_cols.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pivot_cols[(size_t)a] < pivot_cols[(size_t)b]; });

    out.rank = (int)pivot_cols.size();
    out.pivot_cols.reserve(order.size());
    for (int i : order) out.pivot_cols.push_back(pivot_cols[(size_t)i]);

    // kernel vectors by back substitution, one per free column
    std::vector<bool> is_pivot((size_t)cols, false);
    for (int c : out.pivot_cols) is_pivot[(size_t)c] = true;

    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[(size_t)fc]) continue;
        std::vector<uint64_t> v((size_t)cols, 0);
        v[(size_t)fc] = 1;
        for (int k = (int)order.size() - 1; k >= 0; --k) {
            int pc = out.pivot_cols[(size_t)k];
            const auto& prow = pivot_rows[(size_t)pivot_of_col[(size_t)pc]];
            // row is normalized: v[pc] = -(sum_{j>pc} row[j] v[j])
            uint64_t acc = 0;
            for (int j = pc + 1; j < cols; ++j)
                if (prow[(size_t)j] != 0 && v[(size_t)j] != 0)
                    acc = fp_add(acc, fp_mul(prow[(size_t)j], v[(size_t)j], p), p);
            v[(size_t)pc] = acc == 0 ? 0 : p - acc;
        }
        out.kernel_rref.push_back(std::move(v));
    }

    out.kernel_pivot_cols = fp_rref_dense(out.kernel_rref, cols, p);
    return out;
}

LinSubspace kernel_modular(const std::vector<IntRow>& rows, int cols,
                           const KernelOptions& opts, KernelStats* stats) {
    std::vector<PrimeKernel> solved;
    std::size_t nprimes = std::min(opts.initial_primes, opts.max_primes);
    if (nprimes == 0) nprimes = 1;

    while (true) {
        std::vector<uint64_t> primes = modular_primes(nprimes);
        // solve only primes not handled yet
        std::size_t first_new = solved.size();
        solved.resize(nprimes);
        {
            std::size_t hw = std::thread::hardware_concurrency();
            std::size_t nthreads = opts.threads > 0 ? (std::size_t)opts.threads
                                                    : (hw ? hw : 1);
            nthreads = std::min(nthreads, nprimes - first_new);
            if (nthreads <= 1) {
                for (std::size_t i = first_new; i < nprimes; ++i)
                    solved[i] = solve_prime(rows, cols, primes[i]);
            } else {
                std::vector<std::thread> workers;
                std::atomic<std::size_t> next{first_new};
                for (std::size_t t = 0; t < nthreads; ++t)
                    workers.emplace_back([&]() {
                        for (std::size_t i; (i = next.fetch_add(1)) < nprimes;)
                            solved[i] = solve_prime(rows, cols, primes[i]);
                    });
                for (auto& w : workers) w.join();
            }
        }

        // pick the consistent group: maximal rank, then smallest pivot set
        using Key = std::tuple<int, std::vector<int>, std::vector<int>>;
        std::map<Key, std::vector<const PrimeKernel*>> groups;
        for (const auto& pk : solved)
            groups[{-pk.rank, pk.pivot_cols, pk.kernel_pivot_cols}].push_back(&pk);
        const auto& group = groups.begin()->second;

        const int dim = cols - (-std::get<0>(groups.begin()->first));
        const int rank_found = -std::get<0>(groups.begin()->first);

        // CRT-combine the group and reconstruct
        bool ok = true;
        RatMatrix basis(dim, cols);
        for (int i = 0; ok && i < dim; ++i) {
            for (int j = 0; ok && j < cols; ++j) {
                Int value(0), modulus(1);
                for (const PrimeKernel* pk : group)
                    crt_combine(value, modulus, pk->kernel_rref[(size_t)i][(size_t)j], pk->p);
                Rat q;
                if (!rational_reconstruct(value, modulus, q))
                    ok = false;
                else
                    basis(i, j) = q;
            }
        }

        // exact verification: every row annihilates every basis vector
        if (ok) {
            for (int i = 0; ok && i < dim; ++i) {
                for (const IntRow& row : rows) {
                    Rat acc(0);
                    for (const auto& [c, z] : row)
                        if (basis(i, c) != 0) acc += Rat(z) * basis(i, c);
                    if (acc != 0) {
                        ok = false;
                        break;
                    }
                }
            }
        }

        if (ok) {
            std::vector<RatVec> vecs;
            for (int i = 0; i < dim; ++i) {
                RatVec v((size_t)cols);
                for (int j = 0; j < cols; ++j) v[(size_t)j] = basis(i, j);
                vecs.push_back(std::move(v));
            }
            LinSubspace ker = canonical_kernel_from_vectors(cols, std::move(vecs));
            if (ker.dim() == dim) {
                if (stats) {
                    stats->path_used = "modular";
                    stats->primes_used = group.size();
                    stats->rank = rank_found;
                }
                return ker;
            }
            ok = false; // dependent reconstruction, treat as a failed attempt
        }

        if (nprimes >= opts.max_primes)
            throw ComputationError(
                "kernel_basis: rational reconstruction failed after " +
                std::to_string(nprimes) + " primes");
        nprimes = std::min(nprimes * 2, opts.max_primes);
    }
}

} // namespace

LinSubspace kernel_basis(const SparseRatMatrix& m, const KernelOptions& opts,
                         KernelStats* stats) {
    std::vector<IntRow> rows = normalized_integer_rows(m);
    KernelOptions::Path path = opts.path;
    if (path == KernelOptions::Path::Auto)
        path = (m.cols <= 128 && rows.size() <= 2048) ? KernelOptions::Path::Bareiss
                                                      : KernelOptions::Path::Modular;
    if (path == KernelOptions::Path::Bareiss) return kernel_bareiss(rows, m.cols, stats);
    return kernel_modular(rows, m.cols, opts, stats);
}

LinSubspace kernel_basis(const RatMatrix& m, const KernelOptions& opts, KernelStats* stats) {
    return kernel_basis(to_sparse(m), opts, stats);
}

std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b) {
    if ((int)b.size() != a.rows())
        throw PreconditionError("solve_linear: rhs length mismatch");
    const int n = a.cols();
    RatMatrix aug(a.rows(), n + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[(size_t)i];
    }
    auto pivots = rref_inplace(aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    RatVec x((size_t)n, Rat(0));
    for (int k = 0; k < (int)pivots.size(); ++k) x[(size_t)pivots[(size_t)k]] = aug(k, n);
    return x;
}

} // namespace legvar
