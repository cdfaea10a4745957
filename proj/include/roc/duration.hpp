#pragma once

#include <vector>

#include "roc/mc.hpp"
#include "roc/params.hpp"

namespace roc {

enum class Extreme { minimum, maximum };

// Piecewise density of the first (minimum) or last (maximum) spike time.
// Pieces are half-open; each owns its left endpoint. Closed forms for n in {2,3,4}.
double order_stat_pdf(Extreme which, int n, double z, const ChannelParams& p);

// The same density as a callable with its breakpoints exposed (the pieces
// partition the support at these z values).
struct OrderStatPdf {
    Extreme which;
    ChannelParams params;

    double operator()(double z) const;
    std::vector<double> breakpoints() const;
};

// E[Z_(1)] or E[Z_(n)], seconds; closed forms for n in {2,3,4}.
double order_stat_mean(Extreme which, int n, const ChannelParams& p);

// Tbar = E[Z_(n)] - E[Z_(1)], seconds per symbol; tends to (n-1)alpha as
// x -> infinity. n in {2,3,4}.
double mean_duration_analytic(int n, const ChannelParams& p);

// Monte Carlo mean of max(Z) - min(Z); any n >= 2.
Estimate mc_duration(const ChannelParams& p, const McConfig& cfg);

}  // namespace roc
