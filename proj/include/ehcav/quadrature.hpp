#pragma once

#include <utility>
#include <vector>

#include "ehcav/geometry.hpp"
#include "ehcav/trig_poly.hpp"

namespace ehcav {

/// Gauss-Legendre nodes and weights on [0,1].
std::vector<std::pair<double, double>> gauss_legendre_01(int n);

/// Tensor-product Gauss-Legendre estimate of the box integral of `p`.
/// Requires points_per_axis >= 2*max_harmonic + 1.
/// Per-term factored accumulation (identical to the full tensor sum by
/// distributivity, without the cubic node loop).
double integrate_numeric(const TrigPoly& p, const CavityGeometry& geom,
                         int points_per_axis);

/// Same quadrature evaluated the brute-force way: the polynomial value is
/// sampled at every node of the 3-D grid. Slower; used as a belt-and-braces
/// cross-check in the verification suites.
double integrate_numeric_pointwise(const TrigPoly& p, const CavityGeometry& geom,
                                   int points_per_axis);

/// Convenience: points-per-axis choice that is comfortably converged for
/// trigonometric integrands of the given maximal harmonic.
int suggested_points(int max_harmonic);

}  // namespace ehcav
