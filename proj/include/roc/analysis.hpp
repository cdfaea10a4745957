#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "roc/info.hpp"
#include "roc/mc.hpp"
#include "roc/params.hpp"

namespace roc {

// An error probability that rises with x before falling (noise shrinking can
// make this error more likely).
struct AtypicalFinding {
    int n = 0;
    std::uint64_t symbol_index = 0;  // lexicographic rank
    std::string label;
    double peak_x = 0.0;
    double peak_value = 0.0;
    double rising_from = 0.0;  // x interval on which the probability increases
    double rising_to = 0.0;    // (ends at the peak)
};

// One point of a lambda*alpha sweep; everything dimensionless.
struct SweepRecord {
    double x = 0.0;
    double capacity_bits_per_symbol = 0.0;
    double gamma_bits_per_neuron = 0.0;
    double lambda_tbar = 0.0;
    double rate_scaled = 0.0;  // R/lambda
};

enum class SweepMethod { analytic, mc };

struct OptimalPoint {
    double x = 0.0;
    double rate_scaled = 0.0;
};

// Golden-section maximizer; shrinks the bracket below x_tol and returns
// (argmax, value).
std::pair<double, double> golden_max(const std::function<double(double)>& f, double a, double b,
                                     double x_tol);

// Finds every off-identity symbol whose closed-form probability rises then
// falls on the grid; peaks refined to ~1e-12 in x. n in {2,3,4}; the grid
// must be increasing, nonnegative, with >= 3 points.
std::vector<AtypicalFinding> scan_atypical(int n, std::span<const double> x_grid);

// C, gamma, lambda*Tbar and R/lambda per grid point. method == analytic needs
// n in {2,3,4}; method == mc estimates the row and duration per point.
std::vector<SweepRecord> sweep(int n, std::span<const double> x_grid, SweepMethod method,
                               const std::optional<McConfig>& cfg = std::nullopt);

// Maximizer of R/lambda over x > 0; coarse 2000-point bracket plus refinement.
OptimalPoint optimal_point(int n);

// (gamma, R/lambda) pairs ordered by x.
std::vector<std::pair<double, double>> tradeoff_curve(int n, std::span<const double> x_grid);

// All headline metrics at one dimensional parameter point.
PerformanceReport performance_report(const ChannelParams& p);

}  // namespace roc
