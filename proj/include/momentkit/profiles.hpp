#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momentkit/grid.hpp"

namespace momentkit {

// Named test functions supported on [a, b]. Samples inside the support take
// the plain function value (full height at the edge nodes); the support hint
// marks the function as identically zero outside [a, b], and every consumer
// of the hint clips there instead of interpolating down to the neighbouring
// zero sample. That keeps integrals of the discontinuous profiles exact.
//
//   zero       0 everywhere                        integral 0
//   one        1 on the whole grid                 integral = grid length
//   identity   t on the whole grid                 integral = (t1^2 - t0^2)/2
//   indicator  1 on [a,b]                          integral = b - a
//   bump       (t-a)(b-t) on [a,b]                 integral = (b-a)^3/6
//   sin        sin(t) on [a,b]                     integral = cos(a) - cos(b)
//   ramp       (t-a) on [a,b]                      integral = (b-a)^2/2
//
// "one" and "identity" ignore [a, b] and take the whole grid as support.
GridFunction make_profile(const std::string& name, const Grid& grid, double a, double b);

std::vector<std::string> profile_names();

// Closed-form integral of the profile over its support (the oracle for the
// right-hand side of the moment integral identity).
double profile_integral(const std::string& name, const Grid& grid, double a, double b);

// Closed-form value of the degree-n moment average of the profile at s, where
// available (all profiles except sin). Used as an independent oracle.
std::optional<double> profile_transform_value(const std::string& name, int n, double s,
                                              const Grid& grid, double a, double b);

} // namespace momentkit
