#ifndef FITBOUND_KERNELS_HPP
#define FITBOUND_KERNELS_HPP

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// Data-parallel inner loops, each in two variants: an OpenMP kernel used by
// the library and a plain serial reference kept for testing and benchmarks.
// All parallel kernels report the *smallest* witness index so results do not
// depend on the thread schedule.

namespace fitbound::kernels {

struct TripleWitness {
    std::int64_t a = -1, b = -1, c = -1;
    bool found() const { return a >= 0; }
};

// Associativity of an n x n multiplication table: T[T[a][b]][c] == T[a][T[b][c]].
inline bool associativity_serial(const std::int32_t* table, std::int64_t n,
                                 TripleWitness* witness = nullptr) {
    for (std::int64_t a = 0; a < n; ++a) {
        const std::int32_t* row_a = table + a * n;
        for (std::int64_t b = 0; b < n; ++b) {
            const std::int32_t* row_ab = table + static_cast<std::int64_t>(row_a[b]) * n;
            const std::int32_t* row_b = table + b * n;
            for (std::int64_t c = 0; c < n; ++c) {
                if (row_ab[c] != row_a[row_b[c]]) {
                    if (witness) *witness = {a, b, c};
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool associativity_parallel(const std::int32_t* table, std::int64_t n,
                                   TripleWitness* witness = nullptr) {
    std::int64_t best_a = -1, best_b = -1, best_c = -1;
#pragma omp parallel
    {
        std::int64_t loc_a = -1, loc_b = -1, loc_c = -1;
#pragma omp for schedule(dynamic, 4)
        for (std::int64_t a = 0; a < n; ++a) {
            if (loc_a >= 0) continue;  // this thread already has a witness
            const std::int32_t* row_a = table + a * n;
            for (std::int64_t b = 0; b < n && loc_a < 0; ++b) {
                const std::int32_t* row_ab =
                    table + static_cast<std::int64_t>(row_a[b]) * n;
                const std::int32_t* row_b = table + b * n;
                for (std::int64_t c = 0; c < n; ++c) {
                    if (row_ab[c] != row_a[row_b[c]]) {
                        loc_a = a;
                        loc_b = b;
                        loc_c = c;
                        break;
                    }
                }
            }
        }
#pragma omp critical
        {
            if (loc_a >= 0 &&
                (best_a < 0 || loc_a < best_a ||
                 (loc_a == best_a && (loc_b < best_b ||
                                      (loc_b == best_b && loc_c < best_c))))) {
                best_a = loc_a;
                best_b = loc_b;
                best_c = loc_c;
            }
        }
    }
    if (best_a >= 0) {
        if (witness) *witness = {best_a, best_b, best_c};
        return false;
    }
    return true;
}

// Per-index predicate scan over [0, n): returns true when the predicate holds
// everywhere, otherwise reports the smallest failing index.
template <class Pred>
bool all_of_serial(std::int64_t n, Pred&& pred, std::int64_t* witness = nullptr) {
    for (std::int64_t i = 0; i < n; ++i) {
        if (!pred(i)) {
            if (witness) *witness = i;
            return false;
        }
    }
    return true;
}

template <class Pred>
bool all_of_parallel(std::int64_t n, Pred&& pred, std::int64_t* witness = nullptr) {
    std::int64_t best = -1;
#pragma omp parallel
    {
        std::int64_t loc = -1;
#pragma omp for schedule(dynamic, 256)
        for (std::int64_t i = 0; i < n; ++i) {
            if (loc >= 0) continue;
            if (!pred(i)) loc = i;
        }
#pragma omp critical
        {
            if (loc >= 0 && (best < 0 || loc < best)) best = loc;
        }
    }
    if (best >= 0) {
        if (witness) *witness = best;
        return false;
    }
    return true;
}

template <class Pred>
bool all_of(std::int64_t n, Pred&& pred, std::int64_t* witness = nullptr,
            bool parallel = true) {
    if (parallel) return all_of_parallel(n, pred, witness);
    return all_of_serial(n, pred, witness);
}

// Exhaustive enumeration of [0, n) collecting every index accepted by the
// filter, in ascending order regardless of schedule.
template <class Pred>
std::vector<std::int64_t> collect_serial(std::int64_t n, Pred&& pred) {
    std::vector<std::int64_t> out;
    for (std::int64_t i = 0; i < n; ++i)
        if (pred(i)) out.push_back(i);
    return out;
}

template <class Pred>
std::vector<std::int64_t> collect_parallel(std::int64_t n, Pred&& pred) {
#ifdef _OPENMP
    int nthreads = omp_get_max_threads();
#else
    int nthreads = 1;
#endif
    std::vector<std::vector<std::int64_t>> buckets(static_cast<std::size_t>(nthreads));
#pragma omp parallel
    {
#ifdef _OPENMP
        auto& mine = buckets[static_cast<std::size_t>(omp_get_thread_num())];
#else
        auto& mine = buckets[0];
#endif
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i)
            if (pred(i)) mine.push_back(i);
    }
    // static schedule gives each thread an ascending contiguous block
    std::vector<std::int64_t> out;
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    return out;
}

template <class Pred>
std::vector<std::int64_t> collect(std::int64_t n, Pred&& pred, bool parallel = true) {
    if (parallel) return collect_parallel(n, pred);
    return collect_serial(n, pred);
}

}  // namespace fitbound::kernels

#endif
