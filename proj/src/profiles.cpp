#include "momentkit/profiles.hpp"

#include <cmath>
#include <stdexcept>

namespace momentkit {

namespace {

bool whole_grid_profile(const std::string& name) {
    return name == "one" || name == "identity";
}

} // namespace

std::vector<std::string> profile_names() {
    return {"zero", "one", "identity", "indicator", "bump", "sin", "ramp"};
}

GridFunction make_profile(const std::string& name, const Grid& grid, double a, double b) {
    if (whole_grid_profile(name)) {
        auto fn = [&](double t) { return name == "one" ? 1.0 : t; };
        GridFunction f = GridFunction::sample(grid, fn);
        f.set_support(grid.t0(), grid.back());
        return f;
    }
    if (!(a < b))
        throw std::invalid_argument("profile: requires a < b");
    const std::size_t ia = grid.index_of(a);
    const std::size_t ib = grid.index_of(b);
    const double an = grid.node(ia), bn = grid.node(ib);

    std::vector<double> vals(grid.n_points(), 0.0);
    for (std::size_t i = ia; i <= ib; ++i) {
        const double t = grid.node(i);
        double v;
        if (name == "zero")
            v = 0.0;
        else if (name == "indicator")
            v = 1.0;
        else if (name == "bump")
            v = (t - an) * (bn - t);
        else if (name == "sin")
            v = std::sin(t);
        else if (name == "ramp")
            v = t - an;
        else
            throw std::invalid_argument("profile: unknown name '" + name + "'");
        vals[i] = v;
    }
    GridFunction f(grid, std::move(vals));
    f.set_support(an, bn);
    return f;
}

double profile_integral(const std::string& name, const Grid& grid, double a, double b) {
    if (name == "zero")
        return 0.0;
    if (name == "one")
        return grid.back() - grid.t0();
    if (name == "identity")
        return 0.5 * (grid.back() * grid.back() - grid.t0() * grid.t0());
    if (name == "indicator")
        return b - a;
    if (name == "bump")
        return (b - a) * (b - a) * (b - a) / 6.0;
    if (name == "sin")
        return std::cos(a) - std::cos(b);
    if (name == "ramp")
        return 0.5 * (b - a) * (b - a);
    throw std::invalid_argument("profile: unknown name '" + name + "'");
}

std::optional<double> profile_transform_value(const std::string& name, int n, double s,
                                              const Grid& grid, double a, double b) {
    if (n < 1)
        throw std::invalid_argument("profile transform: n must be >= 1");
    if (name == "sin")
        return std::nullopt;
    if (name == "zero")
        return 0.0;

    const double lo = whole_grid_profile(name) ? grid.t0() : a;
    const double hi = whole_grid_profile(name) ? grid.back() : b;
    if (s <= lo)
        return 0.0;
    const double m = std::min(s, hi);
    const double nd = static_cast<double>(n);

    // Antiderivatives of t^(n-1) f(t), scaled by s^n so nothing overflows:
    // G(t) = (t/s)^n * g(t) with d/dt [t^n g(t)] = t^(n-1) f(t).
    auto G = [&](double t) -> double {
        const double r = std::pow(t / s, nd);
        if (name == "indicator")
            return r / nd;
        if (name == "ramp")
            return r * (t / (nd + 1.0) - lo / nd);
        if (name == "bump")
            return r * (-t * t / (nd + 2.0) + (lo + hi) * t / (nd + 1.0) - lo * hi / nd);
        if (name == "one")
            return r / nd;
        if (name == "identity")
            return r * t / (nd + 1.0);
        throw std::invalid_argument("profile transform: unknown name '" + name + "'");
    };
    return nd * (G(m) - G(lo));
}

} // namespace momentkit
