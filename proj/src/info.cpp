#include "roc/info.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "roc/errors.hpp"
#include "roc/permutation.hpp"

namespace roc {
namespace {

// Shared clamping/sum contract for probability vectors.
void check_distribution(std::span<const double> dist) {
    double sum = 0.0;
    for (double v : dist) {
        if (!(v >= -1e-12))
            throw ValidationError("probability entry below -1e-12: " + std::to_string(v));
        sum += std::max(v, 0.0);
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ValidationError("probabilities sum to " + std::to_string(sum) + ", not 1");
}

double entropy_unchecked(std::span<const double> dist) {
    double h = 0.0;
    for (double v : dist) {
        if (v > 0.0) h -= v * log2_of(v);
    }
    return h;
}

double log2_factorial(int n) {
    if (n <= 20) return log2_of(static_cast<double>(factorial(n)));
    return std::lgamma(static_cast<double>(n) + 1.0) / std::numbers::ln2;
}

}  // namespace

double entropy(std::span<const double> dist) {
    check_distribution(dist);
    return entropy_unchecked(dist);
}

double mutual_information(std::span<const double> p_x, const TransitionMatrix& m) {
    check_distribution(p_x);
    const std::size_t k = m.rows.size();
    if (p_x.size() != k) throw ValidationError("input distribution size != number of symbols");
    for (const auto& row : m.rows)
        if (row.size() != k) throw ValidationError("transition matrix is not square");

    std::vector<double> q(k, 0.0);
    double cond = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double px = std::max(p_x[i], 0.0);
        if (px == 0.0) continue;
        cond += px * entropy_unchecked(m.rows[i]);
        for (std::size_t j = 0; j < k; ++j) q[j] += px * m.rows[i][j];
    }
    return entropy_unchecked(q) - cond;
}

double capacity_symmetric(const TransitionRow& row) {
    if (row.probs.size() != factorial(row.n)) throw ValidationError("row length != n!");
    check_distribution(row.probs);
    double c = log2_factorial(row.n) - entropy_unchecked(row.probs);
    if (c < 0.0) {
        if (c < -1e-9) throw ValidationError("capacity below zero");
        c = 0.0;
    }
    return c;
}

double efficiency(double capacity_bits, int n) {
    if (n < 1) throw ParameterError("n must be >= 1");
    if (!(capacity_bits >= 0.0)) throw ParameterError("capacity must be >= 0");
    return capacity_bits / static_cast<double>(n);
}

double efficiency_asymptote(int n) {
    if (n < 1) throw ParameterError("n must be >= 1");
    return log2_factorial(n) / static_cast<double>(n);
}

double rate(double capacity_bits, double mean_duration_sec) {
    if (!(mean_duration_sec > 0.0)) throw ParameterError("mean duration must be > 0");
    if (!(capacity_bits >= 0.0)) throw ParameterError("capacity must be >= 0");
    return capacity_bits / mean_duration_sec;
}

double rate_coding_bound(int n) {
    if (n < 1) throw ParameterError("n must be >= 1");
    return log2_of(static_cast<double>(n) + 1.0) / static_cast<double>(n);
}

}  // namespace roc
