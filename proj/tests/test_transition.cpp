#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "roc/errors.hpp"
#include "roc/latency.hpp"
#include "roc/mc.hpp"
#include "roc/permutation.hpp"
#include "roc/quadrature.hpp"
#include "roc/random.hpp"
#include "roc/transition.hpp"

using namespace roc;

namespace {

double entry(const TransitionRow& row, const char* label) {
    return row.probs[perm_to_index(parse_label(label))];
}

// High-precision reference values for spot entries of the closed-form rows.
struct Ref {
    int n;
    double x;
    const char* label;
    double p;
};
constexpr Ref kRefs[] = {
    {2, 0.25, "AB", 0.61059960846429757},
    {2, 1.0, "AB", 0.81606027941427884},
    {2, 1.0, "BA", 0.18393972058572116},
    {2, 2.0, "BA", 0.067667641618306346},
    {2, 4.0, "AB", 0.99084218055563291},
    {3, 0.25, "ABC", 0.29992697571876425},
    {3, 0.25, "CAB", 0.078727758790169118},
    {3, 1.0, "ABC", 0.640418403556535},
    {3, 1.0, "ACB", 0.16734403112976651},
    {3, 1.0, "BAC", 0.12456992369539214},
    {3, 1.0, "BCA", 0.051071952162351698},
    {3, 1.0, "CAB", 0.0082978447279773238},
    {3, 1.0, "CBA", 0.0082978447279773238},
    {3, 2.0, "ACB", 0.066841390892750893},
    {3, 4.0, "BCA", 0.00016568324316681318},
    {4, 0.25, "ADCB", 0.050836488771615389},
    {4, 0.25, "CDAB", 0.019859529458144621},
    {4, 1.0, "ABCD", 0.49850706716724991},
    {4, 1.0, "ACDB", 0.046802886462251448},
    {4, 1.0, "BADC", 0.028038451868325074},
    {4, 1.0, "CDAB", 0.00081314714443094971},
    {4, 1.0, "DCBA", 0.0001032813406944316},
    {4, 2.0, "BDCA", 5.5142411439585947e-5},
    {4, 2.0, "CBAD", 0.00033657035191445724},
    {4, 4.0, "DABC", 1.5729727267829574e-12},
    {4, 4.0, "ABCD", 0.97261245539308583},
};

}  // namespace

TEST_CASE("closed-form rows match high-precision references") {
    for (const Ref& r : kRefs) {
        const TransitionRow row = analytic_row(r.n, r.x);
        CHECK(row.method == RowMethod::analytic);
        CHECK(std::abs(entry(row, r.label) - r.p) < 5e-15);
    }
}

TEST_CASE("zero noise-to-spacing ratio gives the uniform row") {
    for (int n : {2, 3, 4}) {
        const TransitionRow row = analytic_row(n, 0.0);
        const double u = 1.0 / static_cast<double>(factorial(n));
        for (double p : row.probs) CHECK(std::abs(p - u) < 1e-16);
    }
}

TEST_CASE("rows are probability distributions on a dense grid") {
    for (int n : {2, 3, 4}) {
        for (int i = 0; i <= 200; ++i) {
            const double x = 10.0 * i / 200.0;
            const TransitionRow row = analytic_row(n, x);
            double sum = 0.0;
            for (double p : row.probs) {
                REQUIRE(p >= 0.0);
                REQUIRE(p <= 1.0);
                sum += p;
            }
            REQUIRE(std::abs(sum - 1.0) < 1e-13);
        }
    }
}

TEST_CASE("large x concentrates on the identity") {
    const TransitionRow row = analytic_row(4, 30.0);
    CHECK(row.probs[0] > 1.0 - 1e-12);
}

TEST_CASE("row derivative matches a central difference and sums to zero") {
    for (int n : {2, 3, 4}) {
        const double x = 0.8, h = 1e-6;
        const auto d = analytic_row_derivative(n, x);
        const TransitionRow lo = analytic_row(n, x - h);
        const TransitionRow hi = analytic_row(n, x + h);
        double dsum = 0.0;
        for (std::size_t j = 0; j < d.size(); ++j) {
            const double cd = (hi.probs[j] - lo.probs[j]) / (2.0 * h);
            CHECK(std::abs(d[j] - cd) < 1e-8);
            dsum += d[j];
        }
        CHECK(std::abs(dsum) < 1e-13);
    }
}

TEST_CASE("quadrature rows agree with closed forms") {
    const TransitionRow q2 = quadrature_row(2, 1.0, 1e-10);
    const TransitionRow a2 = analytic_row(2, 1.0);
    CHECK(q2.method == RowMethod::quadrature);
    for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(q2.probs[j] - a2.probs[j]) < 1e-9);

    const TransitionRow q3 = quadrature_row(3, 0.25, 1e-9);
    const TransitionRow a3 = analytic_row(3, 0.25);
    for (std::size_t j = 0; j < 6; ++j) CHECK(std::abs(q3.probs[j] - a3.probs[j]) < 1e-8);

    double qsum = std::accumulate(q3.probs.begin(), q3.probs.end(), 0.0);
    CHECK(std::abs(qsum - 1.0) < 1e-8);
}

TEST_CASE("monte carlo row stays within four standard errors of the closed form") {
    McConfig cfg;
    cfg.master_seed = 42;
    cfg.samples = 1'000'000;
    cfg.workers = 2;
    const ChannelParams p{3, 1.0, 1.0};
    const TransitionRow mc = mc_row(p, cfg);
    const TransitionRow ref = analytic_row(3, 1.0);
    CHECK(mc.method == RowMethod::monte_carlo);
    CHECK(mc.samples == cfg.samples);
    double sum = 0.0;
    for (std::size_t j = 0; j < 6; ++j) {
        const double se = std::sqrt(ref.probs[j] * (1.0 - ref.probs[j]) /
                                    static_cast<double>(cfg.samples));
        CHECK(std::abs(mc.probs[j] - ref.probs[j]) < 4.0 * se);
        CHECK(mc.stderrs[j] > 0.0);
        CHECK(mc.stderrs[j] == doctest::Approx(se).epsilon(0.05));
        sum += mc.probs[j];
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);

    const TransitionRow again = mc_row(p, cfg);
    CHECK(again.probs == mc.probs);
}

TEST_CASE("monte carlo row depends only on the product lambda*alpha") {
    McConfig cfg;
    cfg.master_seed = 7;
    cfg.samples = 200'000;
    cfg.workers = 1;
    const TransitionRow a = mc_row(ChannelParams{3, 2.0, 0.5}, cfg);
    const TransitionRow b = mc_row(ChannelParams{3, 0.25, 4.0}, cfg);
    CHECK(a.probs == b.probs);  // same x=1, same draws
    CHECK(a.x == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("five-neuron quadrature entry agrees with monte carlo") {
    const std::array<int, 5> identity = {0, 1, 2, 3, 4};
    const ChannelParams p{5, 1.0, 1.0};
    const double q = ordered_region_prob(identity, p, 1e-6);

    McConfig cfg;
    cfg.master_seed = 4242;
    cfg.samples = 1'000'000;
    cfg.workers = 2;
    const TransitionRow mc = mc_row(p, cfg);
    const double se = std::sqrt(q * (1.0 - q) / static_cast<double>(cfg.samples));
    CHECK(std::abs(mc.probs[0] - q) < 4.0 * se + 1e-6);
}

TEST_CASE("capability and parameter errors") {
    CHECK_THROWS_AS(analytic_row(5, 1.0), CapabilityError);
    CHECK_THROWS_AS(analytic_row(1, 1.0), ParameterError);
    CHECK_THROWS_AS(analytic_row(3, -0.1), ParameterError);
    CHECK_THROWS_AS(quadrature_row(6, 1.0, 1e-9), CapabilityError);
    CHECK_THROWS_AS(quadrature_row(3, 1.0, 1e-2), ParameterError);
    CHECK_THROWS_AS(quadrature_row(3, 1.0, 1e-13), ParameterError);
    McConfig cfg;
    cfg.samples = 1000;
    CHECK_THROWS_AS((mc_row(ChannelParams{11, 1.0, 1.0}, cfg)), CapabilityError);
}

TEST_CASE("full matrix is symmetric in the channel sense") {
    const TransitionMatrix m = build_matrix(analytic_row(3, 1.0));
    REQUIRE(m.rows.size() == 6);

    // every row holds the same multiset of probabilities
    std::vector<double> base = m.rows[0];
    std::sort(base.begin(), base.end());
    for (const auto& row : m.rows) {
        std::vector<double> s = row;
        std::sort(s.begin(), s.end());
        for (std::size_t j = 0; j < 6; ++j) CHECK(s[j] == base[j]);
    }

    // doubly stochastic: columns sum to one as well
    for (std::size_t t = 0; t < 6; ++t) {
        double col = 0.0;
        for (std::size_t s = 0; s < 6; ++s) col += m.rows[s][t];
        CHECK(std::abs(col - 1.0) < 1e-13);
    }

    // correct transmission probability is the same for every input
    for (std::size_t s = 0; s < 6; ++s)
        CHECK(m.rows[s][s] == doctest::Approx(m.rows[0][0]).epsilon(1e-15));
}

TEST_CASE("matrix rows match a simulation with permuted slot assignment") {
    // Physical check of the relabeling: when the input symbol is sigma, neuron
    // j fires in the slot where sigma places it. The resulting arrival-order
    // histogram must match the corresponding matrix row.
    const TransitionMatrix m = build_matrix(analytic_row(3, 1.0));

    struct PermutedKernel {
        std::array<int, 3> slot_of_neuron;
        std::array<double, 3> z{};
        std::array<int, 3> received{};
        std::uint32_t operator()(Xoshiro256pp& rng) {
            for (int j = 0; j < 3; ++j)
                z[static_cast<std::size_t>(j)] =
                    slot_of_neuron[static_cast<std::size_t>(j)] * 1.0 +
                    exp_sample(rng, 1.0);
            arrival_order_into(z, received);
            return static_cast<std::uint32_t>(order_rank(received));
        }
    };

    McConfig cfg;
    cfg.master_seed = 97;
    cfg.samples = 1'000'000;
    cfg.workers = 2;

    for (std::uint64_t s = 0; s < 6; ++s) {
        const Permutation sigma = index_to_perm(s, 3);
        PermutedKernel kernel{};
        for (int k = 0; k < 3; ++k)
            kernel.slot_of_neuron[static_cast<std::size_t>(sigma.order[static_cast<std::size_t>(k)])] = k;
        const CountTable counts = run_counts(6, kernel, cfg);
        for (std::size_t t = 0; t < 6; ++t) {
            const double ref = m.rows[s][t];
            const double est =
                static_cast<double>(counts.counts[t]) / static_cast<double>(cfg.samples);
            const double se =
                std::sqrt(std::max(ref * (1.0 - ref), 1e-12) / static_cast<double>(cfg.samples));
            CHECK(std::abs(est - ref) < 4.0 * se);
        }
    }
}

TEST_CASE("error-probability split into concave and convex parts") {
    const AcbDecomposition d = decompose_acb(1.0);
    CHECK(d.concave_part == doctest::Approx(0.15904618640178919).epsilon(1e-14));
    CHECK(d.convex_part == doctest::Approx(0.0082978447279773238).epsilon(1e-14));
    CHECK(d.factor_i == doctest::Approx(0.18393972058572116).epsilon(1e-14));
    CHECK(d.factor_ii == doctest::Approx(0.86466471676338731).epsilon(1e-14));
    CHECK(d.concave_part == doctest::Approx(d.factor_i * d.factor_ii).epsilon(1e-15));
    const double acb = entry(analytic_row(3, 1.0), "ACB");
    CHECK(std::abs(d.concave_part + d.convex_part - acb) < 5e-16);
    CHECK_THROWS_AS(decompose_acb(-1.0), ParameterError);
}

TEST_CASE("row labels enumerate lexicographically") {
    const auto labels = row_labels(3);
    REQUIRE(labels.size() == 6);
    CHECK(labels[0] == "ABC");
    CHECK(labels[3] == "BCA");
    CHECK(labels[5] == "CBA");
}
