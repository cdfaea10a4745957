#include "roc/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "roc/duration.hpp"
#include "roc/errors.hpp"
#include "roc/permutation.hpp"
#include "roc/transition.hpp"

namespace roc {
namespace {

void check_grid(std::span<const double> grid) {
    if (grid.size() < 3) throw ParameterError("grid needs >= 3 points");
    if (grid.front() < 0.0) throw ParameterError("grid must be nonnegative");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw ParameterError("grid must be strictly increasing");
}

double lambda_tbar(int n, double x) {
    return mean_duration_analytic(n, ChannelParams{n, x, 1.0});
}

// d(lambda*Tbar)/dx.
double lambda_tbar_derivative(int n, double x) {
    const double e1 = std::exp(-x);
    const double e2 = std::exp(-2.0 * x);
    switch (n) {
        case 2: return 1.0 - e1;
        case 3: return 2.0 - e1 - e2;
        case 4: {
            const double e3 = std::exp(-3.0 * x);
            const double e4 = std::exp(-4.0 * x);
            const double e5 = std::exp(-5.0 * x);
            const double e6 = std::exp(-6.0 * x);
            return 3.0 - e1 - e2 - 1.5 * e3 + 2.0 * e4 / 3.0 + 5.0 * e5 / 6.0 - e6;
        }
        default: throw CapabilityError("analytic duration covers n in {2,3,4}");
    }
}

double capacity_at(int n, double x) {
    return capacity_symmetric(analytic_row(n, x));
}

// dC/dx = sum_j p_j' log2 p_j (the sum of p_j' vanishes).
double capacity_derivative(int n, double x) {
    const TransitionRow row = analytic_row(n, x);
    const std::vector<double> d = analytic_row_derivative(n, x);
    double v = 0.0;
    for (std::size_t j = 0; j < row.probs.size(); ++j)
        if (row.probs[j] > 0.0) v += d[j] * log2_of(row.probs[j]);
    return v;
}

double scaled_rate(int n, double x) {
    return capacity_at(n, x) / lambda_tbar(n, x);
}

// d(R/lambda)/dx via the quotient rule.
double scaled_rate_derivative(int n, double x) {
    const double t = lambda_tbar(n, x);
    return (capacity_derivative(n, x) * t - capacity_at(n, x) * lambda_tbar_derivative(n, x)) /
           (t * t);
}

// Bisection for f' = 0 on [a, b] where f' is positive at a and negative at b.
double bisect_derivative_root(const std::function<double(double)>& df, double a, double b) {
    double fa = df(a);
    double fb = df(b);
    if (!(fa > 0.0 && fb < 0.0)) return 0.5 * (a + b);  // no sign change: keep midpoint
    for (int it = 0; it < 200 && b - a > 1e-13 * (1.0 + b); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = df(m);
        if (fm > 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::pair<double, double> golden_max(const std::function<double(double)>& f, double a, double b,
                                     double x_tol) {
    if (!(b > a) || !(x_tol > 0.0)) throw ParameterError("golden_max needs b > a and x_tol > 0");
    constexpr double kRatio = 0.6180339887498949;  // (sqrt(5)-1)/2
    double c = b - kRatio * (b - a);
    double d = a + kRatio * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > x_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kRatio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kRatio * (b - a);
            fd = f(d);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

std::vector<AtypicalFinding> scan_atypical(int n, std::span<const double> x_grid) {
    check_grid(x_grid);
    const std::size_t npts = x_grid.size();
    const std::uint64_t nf = factorial(n);  // analytic_row below rejects n outside {2,3,4}

    // One row evaluation per grid point, shared across symbols.
    std::vector<std::vector<double>> probs(npts);
    for (std::size_t i = 0; i < npts; ++i) probs[i] = analytic_row(n, x_grid[i]).probs;

    const auto labels = row_labels(n);
    std::vector<AtypicalFinding> findings;
    for (std::uint64_t j = 1; j < nf; ++j) {  // skip the identity symbol
        std::size_t arg = 0;
        for (std::size_t i = 1; i < npts; ++i)
            if (probs[i][j] > probs[arg][j]) arg = i;
        const bool interior = arg > 0 && arg + 1 < npts;
        if (!interior || !(probs[arg][j] > probs[0][j]) || !(probs[arg][j] > probs[npts - 1][j]))
            continue;

        auto value = [n, j](double x) { return analytic_row(n, x).probs[j]; };
        auto slope = [n, j](double x) { return analytic_row_derivative(n, x)[j]; };
        // Golden section toward the peak, then bisection on the closed-form
        // derivative for the last digits.
        auto [gx, gv] = golden_max(value, x_grid[arg - 1], x_grid[arg + 1], 1e-7);
        const double half = 5e-7;
        const double px = bisect_derivative_root(slope, std::max(0.0, gx - half), gx + half);
        AtypicalFinding f;
        f.n = n;
        f.symbol_index = j;
        f.label = labels[j];
        f.peak_x = px;
        f.peak_value = value(px);
        (void)gv;
        // Rising range: from the first grid point where this symbol climbs.
        std::size_t first_rise = 0;
        for (std::size_t i = 0; i + 1 < npts; ++i) {
            if (probs[i + 1][j] > probs[i][j]) {
                first_rise = i;
                break;
            }
        }
        f.rising_from = x_grid[first_rise];
        f.rising_to = px;
        findings.push_back(std::move(f));
    }
    return findings;
}

std::vector<SweepRecord> sweep(int n, std::span<const double> x_grid, SweepMethod method,
                               const std::optional<McConfig>& cfg) {
    check_grid(x_grid);
    std::vector<SweepRecord> records;
    records.reserve(x_grid.size());
    const McConfig base = cfg.value_or(McConfig{});
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const double x = x_grid[i];
        SweepRecord r;
        r.x = x;
        if (method == SweepMethod::analytic) {
            r.capacity_bits_per_symbol = capacity_at(n, x);
            r.lambda_tbar = lambda_tbar(n, x);
        } else {
            McConfig point_cfg = base;
            point_cfg.master_seed = base.master_seed + 0x9E3779B97F4A7C15ULL * i;
            const ChannelParams p{n, x, 1.0};
            r.capacity_bits_per_symbol = capacity_symmetric(mc_row(p, point_cfg));
            McConfig dur_cfg = point_cfg;
            dur_cfg.master_seed ^= 0xD1B54A32D192ED03ULL;
            r.lambda_tbar = mc_duration(p, dur_cfg).mean;
        }
        r.gamma_bits_per_neuron = efficiency(r.capacity_bits_per_symbol, n);
        r.rate_scaled = rate(r.capacity_bits_per_symbol, r.lambda_tbar);
        records.push_back(r);
    }
    return records;
}

OptimalPoint optimal_point(int n) {
    if (n < 2) throw ParameterError("n must be >= 2");
    if (n > 4) throw CapabilityError("optimal_point needs the closed forms; n in {2,3,4}");
    // Coarse bracket over (0, 20], then golden section, then a derivative
    // bisection polish.
    constexpr int kPoints = 2000;
    constexpr double kMax = 20.0;
    double best_x = 0.0;
    double best_v = 0.0;
    for (int i = 1; i <= kPoints; ++i) {
        const double x = kMax * static_cast<double>(i) / kPoints;
        const double v = scaled_rate(n, x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    const double step = kMax / kPoints;
    auto f = [n](double x) { return scaled_rate(n, x); };
    auto [gx, gv] = golden_max(f, std::max(step / 2.0, best_x - step), best_x + step, 1e-7);
    (void)gv;
    auto df = [n](double x) { return scaled_rate_derivative(n, x); };
    const double px = bisect_derivative_root(df, gx - 5e-7, gx + 5e-7);
    return {px, scaled_rate(n, px)};
}

std::vector<std::pair<double, double>> tradeoff_curve(int n, std::span<const double> x_grid) {
    const auto records = sweep(n, x_grid, SweepMethod::analytic);
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(records.size());
    for (const auto& r : records) pairs.emplace_back(r.gamma_bits_per_neuron, r.rate_scaled);
    return pairs;
}

PerformanceReport performance_report(const ChannelParams& p) {
    p.validate();
    PerformanceReport rep;
    rep.n = p.n;
    rep.x = p.x();
    rep.capacity_bits_per_symbol = capacity_at(p.n, p.x());
    rep.efficiency_bits_per_neuron = efficiency(rep.capacity_bits_per_symbol, p.n);
    rep.mean_duration_sec = mean_duration_analytic(p.n, p);
    rep.rate_bits_per_sec = rate(rep.capacity_bits_per_symbol, rep.mean_duration_sec);
    rep.rate_scaled = rep.rate_bits_per_sec / p.lambda;
    return rep;
}

}  // namespace roc
