#include <cmath>

#include "doctest.h"
#include "homrates/bsv_source.hpp"
#include "homrates/errors.hpp"
#include "homrates/math_util.hpp"

using namespace homrates;

TEST_CASE("pair_amplitudes starts at 1/cosh and follows the exact ratio recurrence") {
    const auto amps = pair_amplitudes({1.0, 0.0, 6});
    REQUIRE(amps.size() == 7);
    CHECK(amps[0].n == 0);
    CHECK(amps[0].a_n == doctest::Approx(1.0 / std::cosh(1.0)).epsilon(1e-16));
    const double t = std::tanh(1.0);
    for (int n = 0; n < 6; ++n)
        CHECK(amps[n + 1].a_n == doctest::Approx(amps[n].a_n * t / (2.0 * (n + 1))).epsilon(1e-16));
    // frozen reference values (50-digit arithmetic, rounded to double)
    CHECK(amps[0].a_n == doctest::Approx(0.64805427366388540).epsilon(1e-16));
    CHECK(amps[2].a_n == doctest::Approx(0.046986013343967407).epsilon(1e-15));
}

TEST_CASE("log_pair_prefactor tracks log(a_n) and survives deep underflow") {
    const auto amps = pair_amplitudes({0.8, 0.0, 10});
    for (int n = 0; n <= 10; ++n)
        CHECK(log_pair_prefactor(0.8, n) == doctest::Approx(std::log(amps[n].a_n)).epsilon(1e-13));
    // a_200 underflows any direct product; the log must still be finite
    const double lg = log_pair_prefactor(0.5, 200);
    CHECK(std::isfinite(lg));
    CHECK(lg < -700.0);
}

TEST_CASE("sector probabilities plus the closed tail account for all weight") {
    for (double gamma : {0.2, 0.7, 1.3, 2.5}) {
        for (int n_max : {0, 3, 17}) {
            NeumaierSum acc;
            for (int n = 0; n <= n_max; ++n) acc.add(pair_probability(gamma, n));
            CHECK(acc.value() + truncation_tail(gamma, n_max) ==
                  doctest::Approx(1.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("truncation_tail matches the frozen reference value") {
    CHECK(truncation_tail(1.0, 50) == doctest::Approx(8.6259610251470604e-13).epsilon(1e-13));
}

TEST_CASE("choose_truncation lands on the frozen orders") {
    CHECK(choose_truncation(1.0, 1e-12) == 50);
    CHECK(choose_truncation(1.5, 1e-12) == 138);
    CHECK(choose_truncation(0.5, 1e-12) == 17);
    CHECK(choose_truncation(0.99, 1e-2) == 8);
    CHECK(choose_truncation(2.0, 1e-6) == 188);
    CHECK(choose_truncation(0.0, 1e-12) == 0);
}

TEST_CASE("choose_truncation result is minimal") {
    for (double gamma : {0.5, 1.0, 1.5}) {
        const int n = choose_truncation(gamma, 1e-10);
        CHECK(truncation_tail(gamma, n) < 1e-10);
        if (n > 0) CHECK(truncation_tail(gamma, n - 1) >= 1e-10);
    }
}

TEST_CASE("choose_truncation refuses infeasible requests") {
    CHECK_THROWS_AS(choose_truncation(5.0, 1e-12), CapacityError);
    CHECK_THROWS_AS(choose_truncation(2.5, 1e-12, 50), CapacityError);
    CHECK(choose_truncation(1.6, 1e-12) <= kDefaultTruncationCap);
}

TEST_CASE("gamma = 0 collapses to vacuum") {
    const auto amps = pair_amplitudes({0.0, 0.0, 3});
    CHECK(amps[0].a_n == 1.0);
    for (int n = 1; n <= 3; ++n) CHECK(amps[n].a_n == 0.0);
    CHECK(pair_probability(0.0, 0) == 1.0);
    CHECK(pair_probability(0.0, 2) == 0.0);
    CHECK(truncation_tail(0.0, 0) == 0.0);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((pair_amplitudes({-0.1, 0.0, 3})), InvalidArgumentError);
    CHECK_THROWS_AS((pair_amplitudes({1.0, 0.0, -1})), InvalidArgumentError);
    CHECK_THROWS_AS((pair_amplitudes({std::nan(""), 0.0, 3})), InvalidArgumentError);
    CHECK_THROWS_AS(choose_truncation(1.0, 0.0), InvalidArgumentError);
    CHECK_THROWS_AS(choose_truncation(-1.0, 1e-6), InvalidArgumentError);
}
