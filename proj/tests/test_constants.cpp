#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "core/constants.hpp"
#include "oracles.hpp"

using namespace qd;

TEST_CASE("digamma at the classical points") {
    CHECK(std::fabs(digamma(1.0) + kEulerGamma) <= 1e-14);
    CHECK(std::fabs(digamma(2.0) - (1.0 - kEulerGamma)) <= 1e-12);
    // frozen from the series oracle at 1e7 terms; equals -gamma - 2 ln 2
    CHECK(digamma(0.5) == doctest::Approx(-1.9635100260214235).epsilon(1e-12));
}

TEST_CASE("digamma recurrence residual") {
    for (double x : {0.1, 0.25, 1.0, 2.5, 7.0, 100.0}) {
        double residual = digamma(x + 1.0) - digamma(x) - 1.0 / x;
        CHECK(std::fabs(residual) <= 1e-12);
    }
}

TEST_CASE("digamma agrees with the series oracle on (0, 20]") {
    for (int j = 1; j <= 200; ++j) {
        double x = 0.1 * j;
        double want = oracle::digamma_series(x, 100'000);
        double got = digamma(x);
        CHECK(std::fabs(got - want) <= 1e-10 * std::max(1.0, std::fabs(want)));
    }
}

TEST_CASE("digamma rejects nonpositive arguments") {
    CHECK_THROWS_AS((void)digamma(0.0), ParamError);
    CHECK_THROWS_AS((void)digamma(-3.5), ParamError);
}

TEST_CASE("digamma_diff equals the difference it stands for") {
    std::mt19937_64 rng(7101);
    std::uniform_real_distribution<double> xs(0.05, 50.0);
    std::uniform_real_distribution<double> hs(0.01, 1.0);
    for (int it = 0; it < 2000; ++it) {
        double x = xs(rng), h = hs(rng);
        double split = digamma(x + h) - digamma(x);
        double joint = digamma_diff(x, h);
        CHECK(std::fabs(joint - split) <= 1e-10 * std::max(1.0, std::fabs(joint)));
    }
}

TEST_CASE("digit constants sum to one and stay inside (0,1)") {
    for (long long b = 2; b <= 36; ++b)
        for (long long i = 1; i <= 3; ++i) {
            double sum = 0.0;
            for (long long r = 0; r < b; ++r) {
                double v = digit_constant(b, r, i).value;
                CHECK(v > 0.0);
                CHECK(v < 1.0);
                sum += v;
            }
            CHECK(std::fabs(sum - 1.0) <= 1e-12);
        }
}

TEST_CASE("digit constant frozen values") {
    // frozen from the truncated-series oracle
    DigitConstant c0 = digit_constant(10, 0, 1);
    CHECK(c0.value == doctest::Approx(0.12673036224522805).epsilon(1e-12));
    CHECK(c0.value > 0.1);
    CHECK(c0.value > digit_constant(10, 1, 1).value);
    CHECK(c0.method == ConstantMethod::closed_form);
    CHECK(c0.tail_bound == 0.0);

    CHECK(std::fabs(digit_constant(2, 0, 1).value + digit_constant(2, 1, 1).value - 1.0) <=
          1e-12);
}

TEST_CASE("digit constant decreases strictly in the digit") {
    for (long long b = 2; b <= 36; ++b) {
        double prev = digit_constant(b, 0, 1).value;
        for (long long r = 1; r < b; ++r) {
            double cur = digit_constant(b, r, 1).value;
            CHECK(prev - cur > 1e-14);
            prev = cur;
        }
    }
}

TEST_CASE("series form carries a certified tail bound") {
    DigitConstant closed = digit_constant(10, 0, 1);
    DigitConstant series = digit_constant_series(10, 0, 1, 1'000'000);
    CHECK(std::fabs(series.value - closed.value) <= 1e-6);
    CHECK(series.method == ConstantMethod::truncated_series);

    DigitConstant tiny = digit_constant_series(10, 9, 1, 10);
    DigitConstant closed9 = digit_constant(10, 9, 1);
    CHECK(std::fabs(tiny.value - closed9.value) <= tiny.tail_bound);

    DigitConstant mid = digit_constant_series(3, 1, 2, 10'000);
    CHECK(std::fabs(mid.value - digit_constant(3, 1, 2).value) <= 4.5e-4);
    CHECK(std::fabs(mid.value - digit_constant(3, 1, 2).value) <= mid.tail_bound);

    CHECK_THROWS_AS((void)digit_constant_series(10, 0, 2, 5), ParamError); // K < b^(i-1)
}

TEST_CASE("series-vs-closed property on random parameters") {
    std::mt19937_64 rng(7102);
    std::uniform_int_distribution<long long> bases(2, 36);
    std::uniform_int_distribution<long long> poss(1, 3);
    for (int it = 0; it < 100; ++it) {
        long long b = bases(rng);
        long long i = poss(rng);
        long long r = std::uniform_int_distribution<long long>(0, b - 1)(rng);
        long long start = 1;
        for (long long e = 1; e < i; ++e) start *= b;
        long long cutoff = start + std::uniform_int_distribution<long long>(0, 5000)(rng);
        DigitConstant series = digit_constant_series(b, r, i, cutoff);
        DigitConstant closed = digit_constant(b, r, i);
        CHECK(std::fabs(series.value - closed.value) <= series.tail_bound);
        CHECK(series.value > 0.0);
        CHECK(series.value < 1.0);
    }
}

TEST_CASE("coprime constants are the scaled densities") {
    constexpr double six_over_pi2 = 6.0 / (std::numbers::pi * std::numbers::pi);
    double sum = 0.0;
    for (long long r = 0; r < 10; ++r) sum += coprime_constant(10, r, 1);
    CHECK(std::fabs(sum - six_over_pi2) <= 1e-12);
    CHECK(coprime_constant(10, 0, 1) ==
          doctest::Approx(digit_constant(10, 0, 1).value * six_over_pi2).epsilon(1e-15));
    CHECK(coprime_constant(2, 1, 1) ==
          doctest::Approx((1.0 - digit_constant(2, 0, 1).value) * six_over_pi2).epsilon(1e-12));
}

TEST_CASE("closed form agrees with direct quadrature of the integral form") {
    // c = 1/(2b) + (b^i/2) * int_0^1 (1-t)/(1-t^b) * t^(b^i+r-1) dt, cut at
    // 1-1e-7 with the endpoint remainder bounded by the integrand limit 1/b.
    for (auto [b, r] : {std::pair<long long, long long>{2, 1}, {10, 0}, {10, 7}, {7, 3}}) {
        const double bb = double(b);
        const double expo = bb + double(r) - 1.0; // b^i + r - 1 with i = 1
        auto integrand = [&](double t) {
            if (t == 0.0) return 0.0;
            return (1.0 - t) / (1.0 - std::pow(t, bb)) * std::pow(t, expo);
        };
        const double cut = 1.0 - 1e-7;
        double integral = oracle::adaptive_simpson(integrand, 0.0, cut, 1e-12);
        double endpoint_bound = (1.0 - cut) * 1.05 / bb;
        double quad = 0.5 / bb + 0.5 * bb * integral;
        double closed = digit_constant(b, r, 1).value;
        CHECK(std::fabs(quad - closed) <= 0.5 * bb * endpoint_bound + 1e-9);
    }
}

TEST_CASE("digit_density_real interpolates the integer constants") {
    for (long long r = 0; r < 10; ++r)
        CHECK(digit_density_real(10, double(r), 1) ==
              doctest::Approx(digit_constant(10, r, 1).value).epsilon(1e-15));
    // strictly decreasing along the real segment too
    double prev = digit_density_real(10, 0.0, 1);
    for (double x = 0.25; x <= 9.0; x += 0.25) {
        double cur = digit_density_real(10, x, 1);
        CHECK(cur < prev);
        prev = cur;
    }
}
