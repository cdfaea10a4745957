#include "roc/duration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "roc/errors.hpp"
#include "roc/latency.hpp"

namespace roc {
namespace {

void check_n_closed_form(int n) {
    if (n < 2) throw ParameterError("n must be >= 2");
    if (n > 4)
        throw CapabilityError("closed-form order statistics cover n in {2,3,4}; use mc_duration");
}

}  // namespace

double order_stat_pdf(Extreme which, int n, double z, const ChannelParams& p) {
    p.validate();
    check_n_closed_form(n);
    if (n != p.n) throw ParameterError("n disagrees with params.n");
    const double lam = p.lambda;
    const double alpha = p.alpha;

    if (which == Extreme::minimum) {
        if (z < 0.0) return 0.0;
        // On [k*alpha, (k+1)*alpha) exactly k+1 spikes have started:
        // density (k+1) lam e^{-(k+1) lam (z - k alpha / 2)}.
        int k = n - 1;
        if (alpha > 0.0 && z < static_cast<double>(n - 1) * alpha)
            k = static_cast<int>(std::floor(z / alpha));
        const double m = static_cast<double>(k + 1);
        return m * lam * std::exp(-m * lam * (z - 0.5 * static_cast<double>(k) * alpha));
    }

    // Maximum: zero below (n-1)*alpha; above, all supports are open and the
    // density is sum_j f_j(z) prod_{i != j} F_i(z).
    if (z < static_cast<double>(n - 1) * alpha) return 0.0;
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
        double term = lam * std::exp(-lam * (z - static_cast<double>(j) * alpha));
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            term *= -std::expm1(-lam * (z - static_cast<double>(i) * alpha));
        }
        total += term;
    }
    return total;
}

double OrderStatPdf::operator()(double z) const {
    return order_stat_pdf(which, params.n, z, params);
}

std::vector<double> OrderStatPdf::breakpoints() const {
    std::vector<double> pts;
    if (which == Extreme::minimum) {
        for (int k = 0; k < params.n; ++k) pts.push_back(static_cast<double>(k) * params.alpha);
    } else {
        pts.push_back(static_cast<double>(params.n - 1) * params.alpha);
    }
    return pts;
}

double order_stat_mean(Extreme which, int n, const ChannelParams& p) {
    p.validate();
    check_n_closed_form(n);
    if (n != p.n) throw ParameterError("n disagrees with params.n");
    const double x = p.x();
    const double inv = 1.0 / p.lambda;
    const double e1 = std::exp(-x);
    const double e2 = std::exp(-2.0 * x);
    const double e3 = std::exp(-3.0 * x);

    if (which == Extreme::minimum) {
        switch (n) {
            case 2: return inv * (1.0 - 0.5 * e1);
            case 3: return inv * (1.0 - 0.5 * e1 - e3 / 6.0);
            default: {
                const double e6 = std::exp(-6.0 * x);
                return inv * (1.0 - 0.5 * e1 - e3 / 6.0 - e6 / 12.0);
            }
        }
    }
    switch (n) {
        case 2: return inv * (x + 1.0 + 0.5 * e1);
        case 3: return inv * (2.0 * x + 1.0 + 0.5 * e1 + 0.5 * e2 - e3 / 6.0);
        default: {
            const double e4 = std::exp(-4.0 * x);
            const double e5 = std::exp(-5.0 * x);
            const double e6 = std::exp(-6.0 * x);
            return inv * (3.0 * x + 1.0 + 0.5 * e1 + 0.5 * e2 + e3 / 3.0 - e4 / 6.0 - e5 / 6.0 +
                          e6 / 12.0);
        }
    }
}

double mean_duration_analytic(int n, const ChannelParams& p) {
    // Difference of the two means; linearity of expectation.
    return order_stat_mean(Extreme::maximum, n, p) - order_stat_mean(Extreme::minimum, n, p);
}

namespace {

struct SpanKernel {
    ChannelParams p;
    std::vector<double> z;

    explicit SpanKernel(const ChannelParams& params)
        : p(params), z(static_cast<std::size_t>(params.n)) {}

    double operator()(Xoshiro256pp& rng) {
        sample_latencies(p, rng, z);
        const auto [lo, hi] = std::minmax_element(z.begin(), z.end());
        return *hi - *lo;
    }
};

}  // namespace

Estimate mc_duration(const ChannelParams& p, const McConfig& cfg) {
    p.validate();
    cfg.validate();
    return run_mean(SpanKernel(p), cfg);
}

}  // namespace roc
