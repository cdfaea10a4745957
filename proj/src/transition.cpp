#include "roc/transition.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "roc/errors.hpp"
#include "roc/latency.hpp"
#include "roc/permutation.hpp"
#include "roc/quadrature.hpp"

namespace roc {
namespace {

// Each closed-form entry is a signed combination of e^{-kx}, k = 1..6, plus a
// constant that always evaluates to 1/n! at x = 0. Storing only the e^{-kx}
// coefficients gives both stable forms:
//   p(x)  = 1/n! - sum_k c_k * u_k,   u_k = 1 - e^{-kx} = -expm1(-kx)
//   p'(x) = -sum_k k * c_k * e^{-kx}
struct EntryCoeffs {
    std::array<double, 7> c{};  // c[k] multiplies e^{-kx}; c[0] unused
};

constexpr double kThird = 1.0 / 3.0;
constexpr double kSixth = 1.0 / 6.0;
constexpr double kTwelfth = 1.0 / 12.0;
constexpr double kTwentyFourth = 1.0 / 24.0;

const std::array<EntryCoeffs, 2> kRow2 = {{
    {{0, -0.5, 0, 0, 0, 0, 0}},  // AB
    {{0, 0.5, 0, 0, 0, 0, 0}},   // BA
}};

const std::array<EntryCoeffs, 6> kRow3 = {{
    {{0, -1.0, 0, kSixth, 0, 0, 0}},    // ABC
    {{0, 0.5, 0, -kThird, 0, 0, 0}},    // ACB
    {{0, 0.5, -0.5, kSixth, 0, 0, 0}},  // BAC
    {{0, 0, 0.5, -kThird, 0, 0, 0}},    // BCA
    {{0, 0, 0, kSixth, 0, 0, 0}},       // CAB
    {{0, 0, 0, kSixth, 0, 0, 0}},       // CBA
}};

const std::array<EntryCoeffs, 24> kRow4 = {{
    {{0, -1.5, 0.25, kThird, 0, 0, -kTwentyFourth}},        // ABCD
    {{0, 0.5, -0.25, -kThird, 0, 0, 0.125}},                // ABDC
    {{0, 0.5, -0.5, -kSixth, 0.25, 0, -kTwentyFourth}},     // ACBD
    {{0, 0, 0.5, -kThird, -0.25, 0, 0.125}},                // ACDB
    {{0, 0, 0, kSixth, 0, 0, -0.125}},                      // ADBC
    {{0, 0, 0, kSixth, 0, 0, -0.125}},                      // ADCB
    {{0, 0.5, -0.75, kSixth, kSixth, 0, -kTwentyFourth}},   // BACD
    {{0, 0, 0.25, 0, -kThird, 0, 0.125}},                   // BADC
    {{0, 0, 0.5, -5.0 * kSixth, 5.0 * kTwelfth, 0, -kTwentyFourth}},  // BCAD
    {{0, 0, 0, 0.5, -7.0 * kTwelfth, 0, 0.125}},            // BCDA
    {{0, 0, 0, 0, kSixth, 0, -0.125}},                      // BDAC
    {{0, 0, 0, 0, kSixth, 0, -0.125}},                      // BDCA
    {{0, 0, 0, kSixth, -0.25, kSixth, -kTwentyFourth}},     // CABD
    {{0, 0, 0, 0, 0.25, -kThird, 0.125}},                   // CADB
    {{0, 0, 0, kSixth, -0.25, kSixth, -kTwentyFourth}},     // CBAD
    {{0, 0, 0, 0, 0.25, -kThird, 0.125}},                   // CBDA
    {{0, 0, 0, 0, 0, kSixth, -0.125}},                      // CDAB
    {{0, 0, 0, 0, 0, kSixth, -0.125}},                      // CDBA
    {{0, 0, 0, 0, 0, 0, kTwentyFourth}},                    // DABC
    {{0, 0, 0, 0, 0, 0, kTwentyFourth}},                    // DACB
    {{0, 0, 0, 0, 0, 0, kTwentyFourth}},                    // DBAC
    {{0, 0, 0, 0, 0, 0, kTwentyFourth}},                    // DBCA
    {{0, 0, 0, 0, 0, 0, kTwentyFourth}},                    // DCAB
    {{0, 0, 0, 0, 0, 0, kTwentyFourth}},                    // DCBA
}};

std::span<const EntryCoeffs> coeff_table(int n) {
    if (n < 2) throw ParameterError("n must be >= 2");
    switch (n) {
        case 2: return kRow2;
        case 3: return kRow3;
        case 4: return kRow4;
        default:
            throw CapabilityError(
                "closed forms cover n in {2,3,4}; use mc_row or quadrature_row for n = " +
                std::to_string(n));
    }
}

void check_x(double x) {
    if (!(std::isfinite(x) && x >= 0.0)) throw ParameterError("x must be finite and >= 0");
}

// Sampling kernel counting lexicographic ranks of arrival orders.
template <class Sampler>
struct RankKernel {
    Sampler sampler;
    int n;
    std::array<std::uint64_t, 11> fact;

    RankKernel(Sampler s, int n_) : sampler(s), n(n_) {
        fact[0] = 1;
        for (int i = 1; i <= 10; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
    }

    std::uint32_t operator()(Xoshiro256pp& rng) {
        std::array<double, 10> z;
        std::array<int, 10> ord;
        sampler(rng, std::span<double>(z.data(), static_cast<std::size_t>(n)));
        // Stable insertion sort: equal times keep index order.
        for (int i = 0; i < n; ++i) {
            int j = i;
            while (j > 0 && z[static_cast<std::size_t>(i)] < z[static_cast<std::size_t>(ord[static_cast<std::size_t>(j - 1)])]) {
                ord[static_cast<std::size_t>(j)] = ord[static_cast<std::size_t>(j - 1)];
                --j;
            }
            ord[static_cast<std::size_t>(j)] = i;
        }
        std::uint64_t rank = 0;
        for (int i = 0; i < n; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < n; ++j)
                if (ord[static_cast<std::size_t>(j)] < ord[static_cast<std::size_t>(i)]) ++smaller;
            rank += static_cast<std::uint64_t>(smaller) * fact[static_cast<std::size_t>(n - 1 - i)];
        }
        return static_cast<std::uint32_t>(rank);
    }
};

struct ExpSampler {
    double alpha;
    double lambda;
    void operator()(Xoshiro256pp& rng, std::span<double> z) {
        for (std::size_t i = 0; i < z.size(); ++i)
            z[i] = static_cast<double>(i) * alpha + exp_sample(rng, lambda);
    }
};

struct GaussSampler {
    double alpha;
    double sigma;
    NormalGen normal;
    void operator()(Xoshiro256pp& rng, std::span<double> z) {
        for (std::size_t i = 0; i < z.size(); ++i)
            z[i] = static_cast<double>(i) * alpha + sigma * normal(rng);
    }
};

TransitionRow row_from_counts(const CountTable& table, int n, double x) {
    TransitionRow row;
    row.n = n;
    row.x = x;
    row.method = RowMethod::monte_carlo;
    row.samples = table.samples;
    row.master_seed = table.master_seed;
    const auto total = static_cast<double>(table.samples);
    row.probs.reserve(table.counts.size());
    row.stderrs.reserve(table.counts.size());
    for (std::uint64_t c : table.counts) {
        const double p = static_cast<double>(c) / total;
        row.probs.push_back(p);
        row.stderrs.push_back(std::sqrt(p * (1.0 - p) / total));
    }
    return row;
}

}  // namespace

std::string row_method_name(RowMethod m) {
    switch (m) {
        case RowMethod::analytic: return "analytic";
        case RowMethod::monte_carlo: return "mc";
        case RowMethod::quadrature: return "quadrature";
    }
    return "?";
}

TransitionRow analytic_row(int n, double x) {
    check_x(x);
    const auto table = coeff_table(n);
    const double uniform = 1.0 / static_cast<double>(factorial(n));
    std::array<double, 7> u{};
    for (int k = 1; k <= 6; ++k) u[static_cast<std::size_t>(k)] = -std::expm1(-static_cast<double>(k) * x);

    TransitionRow row;
    row.n = n;
    row.x = x;
    row.method = RowMethod::analytic;
    row.probs.reserve(table.size());
    for (const auto& entry : table) {
        double p = uniform;
        for (int k = 1; k <= 6; ++k) p -= entry.c[static_cast<std::size_t>(k)] * u[static_cast<std::size_t>(k)];
        if (p < 0.0) {
            if (p < -1e-9) throw ValidationError("closed-form entry below zero");
            p = 0.0;
        }
        row.probs.push_back(p);
    }
    return row;
}

std::vector<double> analytic_row_derivative(int n, double x) {
    check_x(x);
    const auto table = coeff_table(n);
    std::array<double, 7> e{};
    for (int k = 1; k <= 6; ++k) e[static_cast<std::size_t>(k)] = std::exp(-static_cast<double>(k) * x);
    std::vector<double> d;
    d.reserve(table.size());
    for (const auto& entry : table) {
        double v = 0.0;
        for (int k = 1; k <= 6; ++k)
            v -= static_cast<double>(k) * entry.c[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(k)];
        d.push_back(v);
    }
    return d;
}

TransitionRow mc_row(const ChannelParams& p, const McConfig& cfg) {
    p.validate();
    cfg.validate();
    if (p.n > 10)
        throw CapabilityError("mc_row supports n <= 10 (count table holds n! entries)");
    RankKernel<ExpSampler> kernel(ExpSampler{p.alpha, p.lambda}, p.n);
    const auto counts = run_counts(factorial(p.n), kernel, cfg);
    return row_from_counts(counts, p.n, p.x());
}

TransitionRow mc_row_gaussian(const GaussianNoiseParams& g, const McConfig& cfg) {
    g.validate();
    cfg.validate();
    if (g.n > 10)
        throw CapabilityError("mc_row_gaussian supports n <= 10 (count table holds n! entries)");
    RankKernel<GaussSampler> kernel(GaussSampler{g.alpha, g.sigma, NormalGen{}}, g.n);
    const auto counts = run_counts(factorial(g.n), kernel, cfg);
    return row_from_counts(counts, g.n, g.alpha / g.sigma);
}

TransitionRow quadrature_row(int n, double x, double tol) {
    check_x(x);
    if (n < 2) throw ParameterError("n must be >= 2");
    if (n > 5) throw CapabilityError("quadrature_row supports n <= 5 (cost n! * nesting depth)");
    if (!(tol >= 1e-12 && tol <= 1e-3)) throw ParameterError("tol must lie in [1e-12, 1e-3]");
    const ChannelParams p{n, x, 1.0};  // probabilities depend on x only

    TransitionRow row;
    row.n = n;
    row.x = x;
    row.method = RowMethod::quadrature;
    const std::uint64_t nf = factorial(n);
    row.probs.reserve(nf);
    for (std::uint64_t k = 0; k < nf; ++k) {
        const Permutation perm = index_to_perm(k, n);
        row.probs.push_back(ordered_region_prob(perm.order, p, tol));
    }
    return row;
}

TransitionMatrix build_matrix(const TransitionRow& row) {
    if (row.n < 2) throw ParameterError("row.n must be >= 2");
    if (row.n > 6) throw CapabilityError("build_matrix supports n <= 6 (matrix holds (n!)^2 entries)");
    const std::uint64_t nf = factorial(row.n);
    if (row.probs.size() != nf) throw ValidationError("row length != n!");

    TransitionMatrix m;
    m.n = row.n;
    m.x = row.x;
    m.method = row.method;
    m.rows.assign(nf, std::vector<double>(nf));
    std::vector<int> pos(static_cast<std::size_t>(row.n));
    std::vector<int> relabeled(static_cast<std::size_t>(row.n));
    for (std::uint64_t s = 0; s < nf; ++s) {
        const Permutation sigma = index_to_perm(s, row.n);
        for (int k = 0; k < row.n; ++k) pos[static_cast<std::size_t>(sigma.order[static_cast<std::size_t>(k)])] = k;
        for (std::uint64_t t = 0; t < nf; ++t) {
            const Permutation y = index_to_perm(t, row.n);
            // y in sigma's intended-order coordinates: slot rank of each arriver.
            for (int k = 0; k < row.n; ++k)
                relabeled[static_cast<std::size_t>(k)] = pos[static_cast<std::size_t>(y.order[static_cast<std::size_t>(k)])];
            m.rows[s][t] = row.probs[order_rank(relabeled)];
        }
    }
    return m;
}

AcbDecomposition decompose_acb(double x) {
    check_x(x);
    AcbDecomposition d;
    d.factor_i = 0.5 * std::exp(-x);
    d.factor_ii = -std::expm1(-2.0 * x);
    d.concave_part = d.factor_i * d.factor_ii;
    d.convex_part = kSixth * std::exp(-3.0 * x);
    return d;
}

std::vector<std::string> row_labels(int n) {
    const std::uint64_t nf = factorial(n);
    std::vector<std::string> labels;
    labels.reserve(nf);
    for (std::uint64_t k = 0; k < nf; ++k) labels.push_back(perm_label(index_to_perm(k, n)));
    return labels;
}

}  // namespace roc
