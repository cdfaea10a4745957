#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "roc/errors.hpp"
#include "roc/info.hpp"
#include "roc/permutation.hpp"
#include "roc/random.hpp"
#include "roc/transition.hpp"

using namespace roc;

TEST_CASE("entropy of reference distributions") {
    const std::array<double, 2> sure = {1.0, 0.0};
    CHECK(entropy(sure) == 0.0);
    const std::array<double, 2> coin = {0.5, 0.5};
    CHECK(entropy(coin) == doctest::Approx(1.0).epsilon(1e-15));
    const std::array<double, 6> u6 = {1 / 6.0, 1 / 6.0, 1 / 6.0, 1 / 6.0, 1 / 6.0, 1 / 6.0};
    CHECK(entropy(u6) == doctest::Approx(2.5849625007211562).epsilon(1e-15));

    const std::array<double, 2> row2 = {0.81606027941427884, 0.18393972058572116};
    CHECK(entropy(row2) == doctest::Approx(0.68862025601391049).epsilon(1e-14));
    // the same pair rounded to seven digits shifts the entropy in the fifth decimal
    const std::array<double, 2> rounded = {0.8160603, 0.1839397};
    CHECK(entropy(rounded) == doctest::Approx(0.68862021176608102).epsilon(1e-14));
}

TEST_CASE("entropy input validation") {
    const std::array<double, 2> negative = {1.1, -0.1};
    CHECK_THROWS_AS(entropy(negative), ValidationError);
    const std::array<double, 2> short_sum = {0.5, 0.4};
    CHECK_THROWS_AS(entropy(short_sum), ValidationError);
    const std::array<double, 2> tiny_neg = {1.0, -1e-13};  // tolerated as zero
    CHECK(entropy(tiny_neg) == 0.0);
}

TEST_CASE("mutual information of reference channels") {
    TransitionMatrix ident;
    ident.n = 4;  // alphabet 4 here, not 4! = 24; MI only needs the matrix shape
    ident.rows = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    const std::array<double, 4> u4 = {0.25, 0.25, 0.25, 0.25};
    CHECK(mutual_information(u4, ident) == doctest::Approx(2.0).epsilon(1e-15));

    TransitionMatrix flat;
    flat.n = 4;
    flat.rows = {{0.25, 0.25, 0.25, 0.25},
                 {0.25, 0.25, 0.25, 0.25},
                 {0.25, 0.25, 0.25, 0.25},
                 {0.25, 0.25, 0.25, 0.25}};
    CHECK(std::abs(mutual_information(u4, flat)) < 1e-15);

    const std::array<double, 3> wrong_size = {0.5, 0.25, 0.25};
    CHECK_THROWS_AS(mutual_information(wrong_size, ident), ValidationError);
    TransitionMatrix ragged = ident;
    ragged.rows[2].pop_back();
    CHECK_THROWS_AS(mutual_information(u4, ragged), ValidationError);
}

TEST_CASE("capacity of the symmetric channel") {
    CHECK(capacity_symmetric(analytic_row(2, 1.0)) ==
          doctest::Approx(0.31137974398608951).epsilon(1e-14));
    CHECK(capacity_symmetric(analytic_row(2, 0.25)) ==
          doctest::Approx(0.035588490244591144).epsilon(1e-13));
    CHECK(capacity_symmetric(analytic_row(3, 1.0)) ==
          doctest::Approx(1.0334078345661281).epsilon(1e-14));
    CHECK(capacity_symmetric(analytic_row(4, 1.0)) ==
          doctest::Approx(2.1152937872699351).epsilon(1e-14));
    // no noise sensitivity at x=0, full alphabet at large x
    CHECK(capacity_symmetric(analytic_row(3, 0.0)) <= 1e-14);
    CHECK(capacity_symmetric(analytic_row(3, 40.0)) ==
          doctest::Approx(2.5849625007211562).epsilon(1e-12));
}

TEST_CASE("capacity equals mutual information under a uniform input") {
    for (int n : {2, 3}) {
        const TransitionRow row = analytic_row(n, 1.0);
        const TransitionMatrix m = build_matrix(row);
        const std::vector<double> u(row.probs.size(),
                                    1.0 / static_cast<double>(row.probs.size()));
        CHECK(std::abs(capacity_symmetric(row) - mutual_information(u, m)) < 1e-12);
    }
}

TEST_CASE("uniform input maximizes mutual information") {
    const TransitionRow row = analytic_row(3, 1.0);
    const TransitionMatrix m = build_matrix(row);
    const double cap = capacity_symmetric(row);
    Xoshiro256pp rng(2024, 0);
    for (int rep = 0; rep < 20; ++rep) {
        // exponential spacings give a uniform draw from the simplex
        std::array<double, 6> p{};
        double s = 0.0;
        for (double& v : p) {
            v = exp_sample(rng, 1.0);
            s += v;
        }
        for (double& v : p) v /= s;
        CHECK(mutual_information(p, m) <= cap + 1e-12);
    }
}

TEST_CASE("efficiency and its asymptote") {
    CHECK(efficiency(1.0334078345661281, 3) ==
          doctest::Approx(0.34446927818870938).epsilon(1e-14));
    CHECK(efficiency_asymptote(2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(efficiency_asymptote(3) == doctest::Approx(0.86165416690705206).epsilon(1e-14));
    CHECK(efficiency_asymptote(4) == doctest::Approx(1.146240625180289).epsilon(1e-14));
    // the large-n branch continues the exact one smoothly
    const double exact20 = std::log2(static_cast<double>(factorial(20))) / 20.0;
    CHECK(efficiency_asymptote(20) == doctest::Approx(exact20).epsilon(1e-12));
    CHECK(efficiency_asymptote(1000) > efficiency_asymptote(100));
    CHECK_THROWS_AS(efficiency(-0.5, 3), ParameterError);
    CHECK_THROWS_AS(efficiency(1.0, 0), ParameterError);
}

TEST_CASE("information rate") {
    CHECK(rate(0.31137974398608951, 1.3678794411714423) ==
          doctest::Approx(0.22763683305264541).epsilon(1e-14));
    CHECK(rate(1.0334078345661281, 2.4355470827897487) ==
          doctest::Approx(0.4243021380569789).epsilon(1e-14));
    CHECK_THROWS_AS(rate(1.0, 0.0), ParameterError);
    CHECK_THROWS_AS(rate(1.0, -2.0), ParameterError);
    CHECK_THROWS_AS(rate(-1.0, 2.0), ParameterError);
}

TEST_CASE("rate-coding ceiling per neuron") {
    CHECK(rate_coding_bound(10) == doctest::Approx(0.34594316186372973).epsilon(1e-14));
    CHECK(rate_coding_bound(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(rate_coding_bound(0), ParameterError);
}
