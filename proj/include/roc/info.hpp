#pragma once

#include <cmath>
#include <numbers>
#include <span>

#include "roc/transition.hpp"

namespace roc {

// Single definition of log2 used by every metric (natural log / ln 2).
inline double log2_of(double v) { return std::log(v) / std::numbers::ln2; }

// Summary of the channel at one parameter point.
struct PerformanceReport {
    int n = 0;
    double x = 0.0;
    double capacity_bits_per_symbol = 0.0;
    double efficiency_bits_per_neuron = 0.0;
    double mean_duration_sec = 0.0;
    double rate_bits_per_sec = 0.0;
    double rate_scaled = 0.0;  // R/lambda
};

// -sum p log2 p, bits. Entries in [-1e-12, 0) are treated as 0; the
// distribution must sum to 1 within 1e-9.
double entropy(std::span<const double> dist);

// H(Y) - sum_x p_x H(row_x), bits.
double mutual_information(std::span<const double> p_x, const TransitionMatrix& m);

// log2(n!) - H(row); equals the capacity because the channel is symmetric.
double capacity_symmetric(const TransitionRow& row);

// gamma = C/n, bits per neuron, and its large-x asymptote log2(n!)/n.
double efficiency(double capacity_bits, int n);
double efficiency_asymptote(int n);

// R = C / Tbar, bits per second.
double rate(double capacity_bits, double mean_duration_sec);

// Per-neuron efficiency ceiling of a rate code over n neurons: log2(n+1)/n.
double rate_coding_bound(int n);

}  // namespace roc
