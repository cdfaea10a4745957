#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roc/mc.hpp"
#include "roc/params.hpp"

namespace roc {

enum class RowMethod { analytic, monte_carlo, quadrature };

std::string row_method_name(RowMethod m);

// One row of the transition matrix: p(symbol | identity input), indexed by
// lexicographic permutation rank.
struct TransitionRow {
    int n = 0;
    double x = 0.0;  // lambda*alpha (alpha/sigma for Gaussian rows)
    std::vector<double> probs;
    RowMethod method = RowMethod::analytic;
    std::vector<double> stderrs;  // per-entry standard errors; MC only
    std::uint64_t samples = 0;    // MC only
    std::uint64_t master_seed = 0;
};

struct TransitionMatrix {
    int n = 0;
    double x = 0.0;
    std::vector<std::vector<double>> rows;
    RowMethod method = RowMethod::analytic;
};

// Split of p(ACB|ABC) into a concave and a convex piece:
// concave = P(Z1 < 2a < Z3 < Z2) = [1/2 e^-x] * [1 - e^-2x], convex = P(2a < Z1 < Z3 < Z2) = e^-3x/6.
struct AcbDecomposition {
    double concave_part = 0.0;
    double convex_part = 0.0;
    double factor_i = 0.0;   // 1/2 e^-x
    double factor_ii = 0.0;  // 1 - e^-2x
};

// Closed-form row for n in {2,3,4}. Exact 1/n! at x=0; entries evaluated in
// an expm1 form that avoids cancellation.
TransitionRow analytic_row(int n, double x);

// Entrywise d/dx of analytic_row; same indexing.
std::vector<double> analytic_row_derivative(int n, double x);

// Empirical row over cfg.samples draws; exact integer counting.
// n <= 10 (count table holds n! entries).
TransitionRow mc_row(const ChannelParams& p, const McConfig& cfg);
TransitionRow mc_row_gaussian(const GaussianNoiseParams& g, const McConfig& cfg);

// Numerical oracle: each entry as a nested ordered-region integral. n <= 5.
// tol is the per-entry absolute tolerance, within [1e-12, 1e-3].
TransitionRow quadrature_row(int n, double x, double tol);

// Full n! x n! matrix from the identity row via channel symmetry:
// p(y | sigma) = row[rank(sigma^-1 . y)]. n <= 6.
TransitionMatrix build_matrix(const TransitionRow& row);

AcbDecomposition decompose_acb(double x);

// Symbol labels in lexicographic rank order ("ABC", "ACB", ...).
std::vector<std::string> row_labels(int n);

}  // namespace roc
