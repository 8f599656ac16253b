// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "irslab/asymptotics.hpp"
#include "irslab/distributions.hpp"
#include "irslab/outage.hpp"
#include "irslab/quadrature.hpp"
#include "irslab/specfun.hpp"

using namespace irslab;

namespace {

const QuadratureSpec kSpec{1e-30, 1e-10, 200};

// True (surrogate-free) CDF of the channel sum at small thresholds, by
// direct quadrature of the exact densities. N = 1 is a single integral,
// N = 2 nests the product-density convolution.
double brute_cdf_h_true(double t, int n, double sigma_d) {
    const auto rayleigh = [sigma_d](double u) { return rayleigh_cdf(u, sigma_d); };
    if (n == 1) {
        return integrate([&](double x) { return double_rayleigh_pdf(x) * rayleigh(t - x); }, 0.0, t, kSpec)
            .value;
    }
    REQUIRE(n == 2);
    const auto inner = [&](double s) {
        if (s <= 0.0) return 0.0;
        return integrate([&](double x) { return double_rayleigh_pdf(x) * double_rayleigh_pdf(s - x); }, 0.0,
                         s, kSpec)
            .value;
    };
    return integrate([&](double s) { return inner(s) * rayleigh(t - s); }, 0.0, t, kSpec).value;
}

OutageCurve curve_from_pairs(const std::vector<std::pair<double, double>>& pts) {
    OutageCurve c;
    for (const auto& [db, p] : pts) {
        OutagePoint op;
        op.gamma_t_db = db;
        op.p_out = p;
        c.points.push_back(op);
    }
    return c;
}

}  // namespace

TEST_CASE("f_S_leading: values and domain") {
    CHECK(f_S_leading(0.1, 1) == doctest::Approx(0.1 * std::log(10.0)).epsilon(1e-13));
    CHECK(f_S_leading(1e-3, 2) ==
          doctest::Approx(std::pow(1e-3, 3) * std::pow(std::log(1000.0), 2) / 6.0).epsilon(1e-13));
    CHECK_THROWS_AS(f_S_leading(1.0, 1), std::domain_error);
    CHECK_THROWS_AS(f_S_leading(0.0, 1), std::domain_error);
    CHECK_THROWS_AS(f_S_leading(0.5, 0), std::domain_error);
}

TEST_CASE("f_S_leading matches the exact product density as x -> 0 (n = 1)") {
    const double x = 1e-4;
    const double ratio = f_S_leading(x, 1) / double_rayleigh_pdf(x);
    CHECK(ratio == doctest::Approx(1.0).epsilon(0.05));
    // and the agreement improves deeper in
    const double ratio2 = f_S_leading(1e-6, 1) / double_rayleigh_pdf(1e-6);
    CHECK(std::fabs(ratio2 - 1.0) < std::fabs(ratio - 1.0));
}

TEST_CASE("cdf_H_leading: formula value and sigma scaling") {
    const double expect = 1e-8 * std::log(100.0) / (4.0 * 1.0 * 2.0 * 3.0 * 1.0);
    CHECK(cdf_H_leading(0.01, 1, 1.0) == doctest::Approx(expect).epsilon(1e-12));
    for (const double t : {0.005, 0.05, 0.3})
        CHECK(cdf_H_leading(t, 2, 2.0) == doctest::Approx(cdf_H_leading(t, 2, 1.0) / 4.0).epsilon(1e-12));
    CHECK_THROWS_AS(cdf_H_leading(1.0, 1, 1.0), std::domain_error);
    CHECK_THROWS_AS(cdf_H_leading(0.5, 1, 0.0), std::domain_error);
}

TEST_CASE("cdf_H_leading vs brute-force quadrature of the exact densities") {
    // n = 1 at t = 1e-2: leading term within 15% of the true double integral
    const double t = 1e-2;
    const double brute1 = brute_cdf_h_true(t, 1, 1.0);
    CHECK(cdf_H_leading(t, 1, 1.0) == doctest::Approx(brute1).epsilon(0.15));

    // ratio inside [0.5, 2] at t = 1e-2 for n in {1, 2}, improving as t drops
    for (const int n : {1, 2}) {
        const double r_coarse = cdf_H_leading(1e-2, n, 1.0) / brute_cdf_h_true(1e-2, n, 1.0);
        INFO("n=", n, " ratio at 1e-2: ", r_coarse);
        CHECK(r_coarse > 0.5);
        CHECK(r_coarse < 2.0);
        const double t_fine = n == 1 ? 1e-3 : 3e-3;  // log convergence is slow
        const double r_fine = cdf_H_leading(t_fine, n, 1.0) / brute_cdf_h_true(t_fine, n, 1.0);
        INFO("n=", n, " ratio at ", t_fine, ": ", r_fine);
        CHECK(std::fabs(std::log(r_fine)) < std::fabs(std::log(r_coarse)));
    }
}

TEST_CASE("cdf_G2_leading: coefficient, power law, closeness to the full CDF") {
    const double coeff = std::exp(ln_gamma(3.0) + ln_gamma(1.5) - std::log(2.0) - ln_gamma(2.0) -
                                  ln_gamma(5.0) - ln_gamma(3.5));
    CHECK(cdf_G2_leading(0.01, 2, 1.0) == doctest::Approx(coeff * std::pow(0.01, 2.5)).epsilon(1e-12));
    // exact power law: the log-log slope is (N+3)/2 at any pair of points
    for (const int n : {1, 2, 4, 7}) {
        const double s = (std::log(cdf_G2_leading(0.9, n, 1.0)) - std::log(cdf_G2_leading(0.1, n, 1.0))) /
                         (std::log(0.9) - std::log(0.1));
        CHECK(s == doctest::Approx(0.5 * double(n + 3)).epsilon(1e-12));
    }
    // deep-tail agreement with the assembled CDF (n = 2); the gap decays
    // like sqrt(t), so it keeps shrinking with t
    const QuadratureSpec quad{1e-14, 1e-10, 200};
    const double gap_mid = std::fabs(cdf_G2_leading(0.05, 2, 1.0) / cdf_G2(0.05, 2, 1.0, quad) - 1.0);
    const double gap_deep = std::fabs(cdf_G2_leading(0.01, 2, 1.0) / cdf_G2(0.01, 2, 1.0, quad) - 1.0);
    INFO("gap at 0.05: ", gap_mid, ", gap at 0.01: ", gap_deep);
    CHECK(gap_mid < 0.15);
    CHECK(gap_deep < gap_mid);
}

TEST_CASE("diversity orders") {
    CHECK(diversity_order(PhaseMode::perfect, 4).value() == 5.0);
    CHECK(diversity_order(PhaseMode::one_bit, 1).value() == 2.0);
    CHECK(diversity_order(PhaseMode::one_bit, 3).value() == 3.0);
    const auto half = diversity_order(PhaseMode::one_bit, 2);
    CHECK(half.num == 5);
    CHECK(half.den == 2);
    for (int n = 1; n <= 32; ++n)
        CHECK(diversity_order(PhaseMode::perfect, n).value() - diversity_order(PhaseMode::one_bit, n).value() ==
              doctest::Approx(0.5 * double(n - 1)).epsilon(1e-15));
    CHECK_THROWS_AS(diversity_order(PhaseMode::perfect, 0), std::domain_error);
}

TEST_CASE("estimate_slope: synthetic curves") {
    SUBCASE("pure power law is recovered exactly") {
        std::vector<std::pair<double, double>> pts;
        for (double db = 0.0; db <= 30.0; db += 3.0) {
            const double g = std::pow(10.0, db / 10.0);
            pts.emplace_back(db, 7.3 * std::pow(g, -3.0));
        }
        CHECK(estimate_slope(curve_from_pairs(pts), {0.0, 30.0}) == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("log-corrected power law: slope sits below the power, rising toward it") {
        // P = c g^-(N+1) (ln g)^N has local slope (N+1) - N/ln(g): the log
        // factor slows the decay, so the fit lands slightly under N+1 and
        // drifts up toward it as the window moves to higher SNR.
        const int n = 2;
        const auto synth = [&](double lo, double hi) {
            std::vector<std::pair<double, double>> pts;
            for (double db = lo; db <= hi; db += 2.0) {
                const double g = std::pow(10.0, db / 10.0);
                pts.emplace_back(db, std::pow(g, -(n + 1.0)) * std::pow(std::log(g), double(n)));
            }
            return estimate_slope(curve_from_pairs(pts), {lo, hi});
        };
        const double low_window = synth(60.0, 80.0);
        const double high_window = synth(100.0, 120.0);
        CHECK(low_window < double(n + 1));
        CHECK(high_window < double(n + 1));
        CHECK(high_window > low_window);  // approaches N+1 from below
        CHECK(std::fabs(high_window - double(n + 1)) < 0.12);
    }
    SUBCASE("slope of the one-bit leading engine is exact") {
        SystemConfig cfg;
        cfg.n_elements = 3;
        cfg.sigma_d = 1.0;
        cfg.gamma_th_db = 0.0;
        for (double db = 20.0; db <= 40.0; db += 2.0) cfg.gamma_t_grid_db.push_back(db);
        const auto curve = outage(OutageMethod::asymptotic_one_bit, cfg, QuadratureSpec{});
        CHECK(estimate_slope(curve, {20.0, 40.0}) == doctest::Approx(3.0).epsilon(1e-9));
    }
    SUBCASE("insufficient points raise") {
        std::vector<std::pair<double, double>> pts{{0.0, 0.5}};
        CHECK_THROWS_AS(estimate_slope(curve_from_pairs(pts), {0.0, 30.0}), InsufficientPointsError);
        pts.emplace_back(10.0, 0.0);  // non-positive p is skipped
        CHECK_THROWS_AS(estimate_slope(curve_from_pairs(pts), {0.0, 30.0}), InsufficientPointsError);
    }
}

TEST_CASE("one-bit analytic curves fit their diversity order over deep tails") {
    // slope over the window where the outage sits in [1e-6, 1e-4]
    const QuadratureSpec quad{1e-14, 1e-10, 200};
    for (const int n : {1, 2, 4}) {
        // locate thresholds bracketing the probability band
        const auto level_t = [&](double p) {
            double lo = 1e-6, hi = 5.0;
            for (int it = 0; it < 80; ++it) {
                const double mid = std::sqrt(lo * hi);
                (cdf_G2(mid, n, 1.0, quad) < p ? lo : hi) = mid;
            }
            return std::sqrt(lo * hi);
        };
        const double t_lo = level_t(1e-6), t_hi = level_t(1e-4);
        const double db_lo = -10.0 * std::log10(t_hi), db_hi = -10.0 * std::log10(t_lo);
        SystemConfig cfg;
        cfg.n_elements = n;
        cfg.sigma_d = 1.0;
        cfg.gamma_th_db = 0.0;
        for (int i = 0; i <= 10; ++i)
            cfg.gamma_t_grid_db.push_back(db_lo + (db_hi - db_lo) * double(i) / 10.0);
        const auto curve = outage(OutageMethod::one_bit, cfg, quad);
        const double slope = estimate_slope(curve, {db_lo, db_hi});
        const double want = 0.5 * double(n + 3);
        INFO("n=", n, " window=[", db_lo, ",", db_hi, "] dB, slope=", slope, " want=", want);
        CHECK(std::fabs(slope - want) / want < 0.15);
    }
}
