#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace momentkit {

// Execution mode for the data-parallel kernels. Parallel runs use OpenMP;
// Serial is the reference path the tests compare against. Both paths fill
// per-index slots and reduce in a fixed order afterwards, so the results are
// bitwise identical regardless of mode or thread count.
enum class Exec { Serial, Parallel };

namespace exec {

// Apply fn(i) for i in [0, count). fn must only write state owned by index i.
template <typename Fn>
void for_index(std::size_t count, Exec mode, Fn&& fn) {
    if (mode == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            fn(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
    }
}

// Pairwise summation with a fixed recursion tree: the result depends only on
// the element order, never on how the elements were produced.
double pairwise_sum(std::span<const double> xs);

double pairwise_sum(const std::vector<double>& xs);

int max_threads();

} // namespace exec
} // namespace momentkit
