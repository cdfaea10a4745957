#pragma once

#include <functional>
#include <span>

#include "roc/params.hpp"

namespace roc {

// Adaptive Gauss-Kronrod (G7/K15) to absolute tolerance abs_tol.
// breakpoints: interior points where the integrand is non-smooth; the
// initial segmentation splits there.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, std::span<const double> breakpoints = {});

// P(Z_{order[0]} < Z_{order[1]} < ... < Z_{order[n-1]}) for the exponential
// delay model, by iterated adaptive quadrature over the ordered region.
// Upper truncation at (n-1)alpha + 40/lambda; every nesting level is
// integrated numerically with per-level budget tol/(2n).
double ordered_region_prob(std::span<const int> order, const ChannelParams& p, double tol);

}  // namespace roc
