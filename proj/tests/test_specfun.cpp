// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "irslab/quadrature.hpp"
#include "irslab/specfun.hpp"

using namespace irslab;

namespace {

// Deterministic parameter generator for property sweeps (LCG is plenty).
struct ParamGen {
    std::uint64_t state;
    explicit ParamGen(std::uint64_t seed) : state(seed) {}
    double uniform(double lo, double hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + (hi - lo) * (double(state >> 11) * 0x1.0p-53);
    }
};

}  // namespace

TEST_CASE("ln_gamma spot values") {
    CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    // reflection/duplication check: Gamma(1/2) = sqrt(pi)
    CHECK(ln_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-13));
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-2.0), std::domain_error);
}

TEST_CASE("ln_gamma recurrence property") {
    ParamGen gen(42);
    for (int i = 0; i < 200; ++i) {
        const double a = gen.uniform(0.05, 80.0);
        CHECK(ln_gamma(a + 1.0) == doctest::Approx(ln_gamma(a) + std::log(a)).epsilon(1e-12));
    }
}

TEST_CASE("upper incomplete gamma: exponential special case and x = 0") {
    CHECK(upper_incomplete_gamma(1.0, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-13));
    for (const double a : {0.3, 1.0, 2.5, 7.0, 40.0})
        CHECK(upper_incomplete_gamma(a, 0.0) == doctest::Approx(std::exp(ln_gamma(a))).epsilon(1e-13));
    CHECK_THROWS_AS(upper_incomplete_gamma(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(upper_incomplete_gamma(1.0, -1.0), std::domain_error);
}

TEST_CASE("upper incomplete gamma vs quadrature oracle") {
    // Independent route: adaptive quadrature of the defining integral.
    const QuadratureSpec spec{1e-12, 1e-12, 200};
    const auto oracle = [&](double a, double x) {
        return integrate_to_inf([a](double t) { return std::pow(t, a - 1.0) * std::exp(-t); }, x, spec).value;
    };
    CHECK(upper_incomplete_gamma(2.5, 1.3) == doctest::Approx(oracle(2.5, 1.3)).epsilon(1e-10));
    // frozen from the same oracle
    CHECK(upper_incomplete_gamma(2.5, 1.3) == doctest::Approx(1.0121136007032034).epsilon(1e-10));
    CHECK(upper_incomplete_gamma(0.5, 3.7) == doctest::Approx(oracle(0.5, 3.7)).epsilon(1e-10));
    CHECK(upper_incomplete_gamma(6.0, 2.2) == doctest::Approx(oracle(6.0, 2.2)).epsilon(1e-10));
    CHECK(upper_incomplete_gamma(12.5, 20.0) == doctest::Approx(oracle(12.5, 20.0)).epsilon(1e-10));
}

TEST_CASE("incomplete gamma recurrence Gamma(a+1,x) = a Gamma(a,x) + x^a e^-x") {
    ParamGen gen(7);
    for (int i = 0; i < 300; ++i) {
        const double a = gen.uniform(0.1, 30.0);
        const double x = gen.uniform(0.0, 60.0);
        const double lhs = upper_incomplete_gamma(a + 1.0, x);
        const double rhs = a * upper_incomplete_gamma(a, x) + std::pow(x, a) * std::exp(-x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("regularized gamma: complementarity and monotonicity") {
    ParamGen gen(11);
    for (int i = 0; i < 200; ++i) {
        const double a = gen.uniform(0.2, 50.0);
        const double x = gen.uniform(0.0, 100.0);
        CHECK(regularized_gamma_p(a, x) + regularized_gamma_q(a, x) == doctest::Approx(1.0).epsilon(1e-12));
    }
    // Gamma(a, x) nonincreasing in x
    double prev = upper_incomplete_gamma(2.5, 0.0);
    for (double x = 0.25; x < 12.0; x += 0.25) {
        const double cur = upper_incomplete_gamma(2.5, x);
        CHECK(cur <= prev + 1e-15);
        prev = cur;
    }
}

TEST_CASE("bessel K0: reference values across the range") {
    // 30-digit reference values (mpmath); the splice sits at x = 2.
    const struct {
        double x, k0;
    } table[] = {
        {1e-8, 18.536612259610778},  {1e-6, 13.931442073626419},
        {0.5, 0.92441907122766586},  {1.0, 0.42102443824070833},
        {2.0, 0.11389387274953343},  {2.0000001, 0.11389385876294617},
        {5.0, 0.0036910983340425942}, {10.0, 1.7780062316167652e-5},
        {50.0, 3.4101677497894955e-23}, {100.0, 4.656628229175902e-45},
        {600.0, 1.3558285309948524e-262},
    };
    for (const auto& row : table)
        CHECK(bessel_k0(row.x) == doctest::Approx(row.k0).epsilon(1e-12));
    CHECK(bessel_k0(800.0) == 0.0);  // graceful underflow
    CHECK_THROWS_AS(bessel_k0(0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k0(-1.0), std::domain_error);
}

TEST_CASE("bessel K0 x=2.0000001 continuity across splice") {
    const double below = bessel_k0(1.9999999);
    const double above = bessel_k0(2.0000001);
    CHECK(std::fabs(below - above) / below < 1e-6);
}

TEST_CASE("bessel K0 vs quadrature of the integral representation") {
    // K0(x) = int_0^inf exp(-x cosh t) dt (even integral representation)
    const QuadratureSpec spec{1e-13, 1e-12, 200};
    for (const double x : {0.3, 1.0, 2.5, 6.0}) {
        const double oracle =
            integrate([x](double t) { return std::exp(-x * std::cosh(t)); }, 0.0, 40.0, spec).value;
        CHECK(bessel_k0(x) == doctest::Approx(oracle).epsilon(1e-10));
    }
}

TEST_CASE("bessel K0 small-argument series and large-argument asymptotics") {
    constexpr double euler = 0.5772156649015329;
    // x -> 0:  K0 ~ -ln(x/2) - gamma_E
    for (const double x : {1e-6, 1e-7, 1e-8}) {
        const double lead = -std::log(0.5 * x) - euler;
        CHECK(bessel_k0(x) == doctest::Approx(lead).epsilon(1e-6));
    }
    // x -> inf: K0 ~ e^-x sqrt(pi/2x) (1 - 1/8x + 9/128x^2)
    for (const double x : {10.0, 30.0, 80.0}) {
        const double lead = std::exp(-x) * std::sqrt(M_PI / (2.0 * x)) *
                            (1.0 - 1.0 / (8.0 * x) + 9.0 / (128.0 * x * x));
        CHECK(bessel_k0(x) == doctest::Approx(lead).epsilon(1e-4));
    }
}

TEST_CASE("bessel K1 reference values and dK0/dx = -K1") {
    const struct {
        double x, k1;
    } table[] = {
        {0.5, 1.6564411200033009}, {1.0, 0.60190723019723457},
        {2.0, 0.13986588181652243}, {5.0, 0.0040446134454521642},
        {10.0, 1.8648773453825585e-5},
    };
    for (const auto& row : table)
        CHECK(bessel_k1(row.x) == doctest::Approx(row.k1).epsilon(1e-12));
    // central finite difference of K0
    for (const double x : {0.5, 1.0, 5.0}) {
        const double h = 1e-6 * x;
        const double deriv = (bessel_k0(x + h) - bessel_k0(x - h)) / (2.0 * h);
        CHECK(deriv == doctest::Approx(-bessel_k1(x)).epsilon(1e-6));
    }
}

TEST_CASE("specfun purity: identical inputs give bit-identical outputs") {
    for (const double x : {0.37, 1.0, 2.0, 13.5, 250.0}) {
        CHECK(bessel_k0(x) == bessel_k0(x));
        CHECK(bessel_k1(x) == bessel_k1(x));
        CHECK(ln_gamma(x) == ln_gamma(x));
        CHECK(upper_incomplete_gamma(2.2, x) == upper_incomplete_gamma(2.2, x));
    }
}

TEST_CASE("binomial: exact small cases and Pascal oracle") {
    CHECK(binomial(5, 2) == 10.0);
    for (int n = 0; n <= 12; ++n) CHECK(binomial(n, 0) == 1.0);
    CHECK(binomial(40, 20) == 137846528820.0);
    CHECK_THROWS_AS(binomial(4, 5), std::domain_error);
    CHECK_THROWS_AS(binomial(4, -1), std::domain_error);

    // Pascal-triangle oracle up to n = 60
    std::vector<std::vector<double>> pascal(61);
    for (int n = 0; n <= 60; ++n) {
        pascal[n].assign(size_t(n) + 1, 1.0);
        for (int i = 1; i < n; ++i) pascal[n][size_t(i)] = pascal[n - 1][size_t(i - 1)] + pascal[n - 1][size_t(i)];
    }
    for (int n = 0; n <= 60; ++n)
        for (int i = 0; i <= n; ++i)
            CHECK(binomial(n, i) == doctest::Approx(pascal[n][size_t(i)]).epsilon(1e-15));

    // ln_gamma route beyond 60
    CHECK(binomial(70, 35) == doctest::Approx(112186277816662845432.0).epsilon(1e-10));
}

TEST_CASE("AccuracyBudget invariants") {
    CHECK_THROWS_AS(ln_gamma(1.0) + upper_incomplete_gamma(1.0, 1.0, AccuracyBudget{-1.0, 1e-14, 100}),
                    std::invalid_argument);
    CHECK_THROWS_AS(upper_incomplete_gamma(1.0, 1.0, AccuracyBudget{1e-300, 0.0, 100}), std::invalid_argument);
    CHECK_THROWS_AS(upper_incomplete_gamma(1.0, 1.0, AccuracyBudget{1e-300, 1e-14, 0}), std::invalid_argument);
}
