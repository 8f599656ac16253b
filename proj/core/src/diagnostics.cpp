// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors

#include "irslab/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "irslab/distributions.hpp"
#include "irslab/specfun.hpp"

namespace irslab {

namespace {

// x K0(x) drops below 1e-300 near x ~ 697; past here both densities in
// the KL integrand are treated as zero.
constexpr double kTailCutoff = 705.0;

}  // namespace

void KlSpec::validate() const {
    if (n_elements < 1) throw std::invalid_argument("KlSpec: n_elements must be >= 1");
    if (epsilon < -0.5 || epsilon > 0.5) throw std::invalid_argument("KlSpec: epsilon must be in [-0.5, 0.5]");
    if (!(perturbed_shape() > 0.0)) throw std::invalid_argument("KlSpec: perturbed shape must be > 0");
}

double KlSpec::perturbed_shape() const {
    return gamma_surrogate().k + epsilon / double(n_elements);
}

double kl_double_rayleigh_vs_gamma(const KlSpec& spec, const QuadratureSpec& quad) {
    spec.validate();
    const double kp = spec.perturbed_shape();
    const double theta = gamma_surrogate().theta;
    const double ln_norm = kp * std::log(theta) + ln_gamma(kp);
    const auto integrand = [&](double x) {
        if (x <= 0.0) return 0.0;
        const double f = x * bessel_k0(x);
        if (f <= 0.0) return 0.0;
        const double ln_g = (kp - 1.0) * std::log(x) - x / theta - ln_norm;
        return f * (std::log(f) - ln_g);
    };
    return integrate(integrand, 0.0, kTailCutoff, quad).value;
}

KlResult kl_student_t_vs_normal(int n, const QuadratureSpec& quad) {
    if (n < 1) throw std::domain_error("kl_student_t_vs_normal: n must be >= 1");
    if (n <= 2) {
        // E[X^2] is infinite for n <= 2, so the cross term diverges.
        return {std::numeric_limits<double>::infinity(), true};
    }
    const double nu = double(n);
    const double ln_c = ln_gamma(0.5 * (nu + 1.0)) - 0.5 * std::log(nu * M_PI) - ln_gamma(0.5 * nu);
    const auto integrand = [&](double x) {
        const double ln_ft = ln_c - 0.5 * (nu + 1.0) * std::log1p(x * x / nu);
        const double ln_phi = -0.5 * x * x - 0.5 * std::log(2.0 * M_PI);
        return std::exp(ln_ft) * (ln_ft - ln_phi);
    };
    return {2.0 * integrate_to_inf(integrand, 0.0, quad).value, false};
}

double joint_pdf_xy(double x, double y) {
    if (x < 0.0) return 0.0;
    const double r = std::hypot(x, y);
    if (r == 0.0) throw std::domain_error("joint_pdf_xy: undefined at the origin");
    return bessel_k0(r) / M_PI;
}

double joint_entropy_xy(const QuadratureSpec& quad) {
    // Half-plane, radially symmetric:
    //   h = -int r K0(r) [ln K0(r) - ln pi] dr = ln pi - int r K0(r) ln K0(r) dr.
    const auto integrand = [](double r) {
        if (r <= 0.0) return 0.0;
        const double k0 = bessel_k0(r);
        if (k0 <= 0.0) return 0.0;
        return r * k0 * std::log(k0);
    };
    const double j = integrate(integrand, 0.0, kTailCutoff, quad).value;
    return std::log(M_PI) - j;
}

double mutual_information_xy(const QuadratureSpec& quad) {
    const double h_x = 1.0;             // unit exponential
    const double h_y = 1.0 + M_LN2;     // unit Laplace
    return h_x + h_y - joint_entropy_xy(quad);
}

}  // namespace irslab
