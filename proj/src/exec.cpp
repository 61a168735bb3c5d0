#include "momentkit/exec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace momentkit::exec {

namespace {

double pairwise(const double* xs, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            s += xs[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise(xs, half) + pairwise(xs + half, n - half);
}

} // namespace

double pairwise_sum(std::span<const double> xs) {
    return pairwise(xs.data(), xs.size());
}

double pairwise_sum(const std::vector<double>& xs) {
    return pairwise(xs.data(), xs.size());
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace momentkit::exec
