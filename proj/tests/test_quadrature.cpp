// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "irslab/quadrature.hpp"

using namespace irslab;

TEST_CASE("finite interval basics") {
    const QuadratureSpec spec;
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0, spec).value ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI, spec).value ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0, spec).value == 0.0);
}

TEST_CASE("integrable endpoint singularity") {
    const QuadratureSpec spec;
    // int_0^1 x^{-1/2} dx = 2
    CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec).value ==
          doctest::Approx(2.0).epsilon(1e-10));
    // int_0^1 ln(x) dx = -1
    CHECK(integrate([](double x) { return std::log(x); }, 0.0, 1.0, spec).value ==
          doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("semi-infinite intervals") {
    const QuadratureSpec spec;
    CHECK(integrate_to_inf([](double x) { return std::exp(-x); }, 0.0, spec).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_to_inf([](double x) { return std::exp(-0.5 * x * x); }, 0.0, spec).value ==
          doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-12));
}

TEST_CASE("achieved error estimate is reported") {
    const QuadratureSpec spec;
    const auto r = integrate([](double x) { return std::cos(x); }, 0.0, 1.0, spec);
    CHECK(r.abs_error >= 0.0);
    CHECK(r.abs_error < 1e-8);
}

TEST_CASE("nonconvergence raises QuadratureError with the estimate") {
    QuadratureSpec strict;
    strict.abs_tol = 1e-300;
    strict.rel_tol = 1e-16;  // unreachable for this kernel
    strict.max_subdivisions = 3;
    bool threw = false;
    try {
        integrate([](double x) { return std::sin(1.0 / (x + 1e-8)); }, 0.0, 1.0, strict);
    } catch (const QuadratureError& ex) {
        threw = true;
        CHECK(ex.achieved_abs_error() > 0.0);
    }
    CHECK(threw);
}

TEST_CASE("spec validation") {
    QuadratureSpec bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = {};
    bad.max_subdivisions = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("IRSLAB_QUAD_TOL overrides the default abs tolerance") {
    ::setenv("IRSLAB_QUAD_TOL", "1e-6", 1);
    CHECK(default_quadrature_spec().abs_tol == doctest::Approx(1e-6));
    ::setenv("IRSLAB_QUAD_TOL", "not-a-number", 1);
    CHECK(default_quadrature_spec().abs_tol == doctest::Approx(1e-10));
    ::unsetenv("IRSLAB_QUAD_TOL");
    CHECK(default_quadrature_spec().abs_tol == doctest::Approx(1e-10));
}
