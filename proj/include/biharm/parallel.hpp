#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace biharm {

/// Execution policy for the data-parallel inner loops.  `serial` is the
/// reference implementation kept for testing; `parallel` uses OpenMP when the
/// build has it and degrades to the serial path otherwise.
enum class Exec { serial, parallel };

inline bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace detail {

// Reductions are blocked on a fixed tile size so that partial sums are formed
// over the same index ranges no matter how many threads run.  Combining the
// partials in block order then yields bit-identical results for Exec::serial,
// Exec::parallel, and any OMP_NUM_THREADS.
inline constexpr std::size_t reduction_block = 1024;

inline std::size_t block_count(std::size_t n) {
    return (n + reduction_block - 1) / reduction_block;
}

}  // namespace detail

/// Deterministic blocked sum of term(0..n-1).  T must be value-initializable
/// and support +=.
template <typename T, typename F>
T block_sum(std::size_t n, F&& term, Exec exec = Exec::parallel) {
    const std::size_t nb = detail::block_count(n);
    std::vector<T> partial(nb, T{});
    auto run_block = [&](std::size_t b) {
        const std::size_t lo = b * detail::reduction_block;
        const std::size_t hi = std::min(n, lo + detail::reduction_block);
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        partial[b] = acc;
    };
    if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long b = 0; b < static_cast<long long>(nb); ++b)
            run_block(static_cast<std::size_t>(b));
    } else {
        for (std::size_t b = 0; b < nb; ++b) run_block(b);
    }
    T total{};
    for (std::size_t b = 0; b < nb; ++b) total += partial[b];
    return total;
}

/// Location-carrying extremum: value plus the first index attaining it.
struct ScoredIndex {
    double value = 0.0;
    std::size_t index = 0;
};

/// Deterministic blocked maximum of score(0..n-1); ties keep the lowest
/// index, so the result is the first maximum in scan order.  n must be >= 1.
template <typename F>
ScoredIndex block_max(std::size_t n, F&& score, Exec exec = Exec::parallel) {
    const std::size_t nb = detail::block_count(n);
    std::vector<ScoredIndex> partial(nb);
    auto run_block = [&](std::size_t b) {
        const std::size_t lo = b * detail::reduction_block;
        const std::size_t hi = std::min(n, lo + detail::reduction_block);
        ScoredIndex best{score(lo), lo};
        for (std::size_t i = lo + 1; i < hi; ++i) {
            const double s = score(i);
            if (s > best.value) best = {s, i};
        }
        partial[b] = best;
    };
    if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long b = 0; b < static_cast<long long>(nb); ++b)
            run_block(static_cast<std::size_t>(b));
    } else {
        for (std::size_t b = 0; b < nb; ++b) run_block(b);
    }
    ScoredIndex best = partial[0];
    for (std::size_t b = 1; b < nb; ++b)
        if (partial[b].value > best.value) best = partial[b];
    return best;
}

/// Deterministic blocked minimum; ties keep the lowest index.
template <typename F>
ScoredIndex block_min(std::size_t n, F&& score, Exec exec = Exec::parallel) {
    auto neg = [&](std::size_t i) { return -score(i); };
    ScoredIndex m = block_max(n, neg, exec);
    return {-m.value, m.index};
}

}  // namespace biharm
