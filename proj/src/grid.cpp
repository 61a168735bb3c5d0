#include "momentkit/grid.hpp"

#include <cmath>

namespace momentkit {

Grid::Grid(double t0, double h, std::size_t n_points) : t0_(t0), h_(h), n_(n_points) {
    if (!std::isfinite(t0) || t0 < 0.0)
        throw std::invalid_argument("grid: t0 must be finite and >= 0");
    if (!std::isfinite(h) || !(h > 0.0))
        throw std::invalid_argument("grid: step must be finite and > 0");
    if (n_points < 2)
        throw std::invalid_argument("grid: needs at least two nodes");
}

Grid Grid::span(double t0, double t1, double h) {
    if (!(t1 > t0))
        throw std::invalid_argument("grid: span needs t1 > t0");
    const double cells = (t1 - t0) / h;
    const double rounded = std::round(cells);
    if (std::fabs(cells - rounded) > 1e-6 * std::max(1.0, cells) || rounded < 1.0)
        throw std::invalid_argument("grid: span endpoints are not h-aligned");
    return Grid(t0, h, static_cast<std::size_t>(rounded) + 1);
}

std::size_t Grid::index_of(double x) const {
    const double pos = (x - t0_) / h_;
    const double rounded = std::round(pos);
    if (rounded < 0.0 || rounded > static_cast<double>(n_ - 1))
        throw std::invalid_argument("grid: point lies outside the grid");
    const std::size_t k = static_cast<std::size_t>(rounded);
    if (std::fabs(x - node(k)) > 1e-9 * std::max(1.0, std::fabs(x)))
        throw std::invalid_argument("grid: point is not on a node");
    return k;
}

bool Grid::is_node(double x) const {
    const double pos = (x - t0_) / h_;
    const double rounded = std::round(pos);
    if (rounded < 0.0 || rounded > static_cast<double>(n_ - 1))
        return false;
    return std::fabs(x - node(static_cast<std::size_t>(rounded))) <=
           1e-9 * std::max(1.0, std::fabs(x));
}

} // namespace momentkit
