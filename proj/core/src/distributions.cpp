// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors

#include "irslab/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "irslab/specfun.hpp"

namespace irslab {

GammaShapeScale gamma_surrogate() {
    const double pi2 = M_PI * M_PI;
    return {pi2 / (16.0 - pi2), (16.0 - pi2) / (2.0 * M_PI)};
}

double double_rayleigh_pdf(double x) {
    if (x < 0.0) throw std::domain_error("double_rayleigh_pdf: x must be >= 0");
    if (x == 0.0) return 0.0;  // limit of x K0(x) ~ -x ln x
    return x * bessel_k0(x);
}

double gamma_pdf(double x, double shape, double scale) {
    if (!(shape > 0.0 && scale > 0.0)) throw std::domain_error("gamma_pdf: shape/scale must be > 0");
    if (x < 0.0) return 0.0;
    if (x == 0.0) return shape < 1.0 ? std::numeric_limits<double>::infinity() : (shape == 1.0 ? 1.0 / scale : 0.0);
    return std::exp((shape - 1.0) * std::log(x) - x / scale - shape * std::log(scale) - ln_gamma(shape));
}

double sum_s_pdf(double x, int n) {
    if (n < 1) throw std::domain_error("sum_s_pdf: n must be >= 1");
    const auto g = gamma_surrogate();
    return gamma_pdf(x, double(n) * g.k, g.theta);
}

double cos_phase_pdf(double x) {
    if (x < 0.0 || x > 1.0) return 0.0;
    if (x == 1.0) return std::numeric_limits<double>::infinity();
    return 2.0 / (M_PI * std::sqrt(1.0 - x * x));
}

double xn_pdf(double z) {
    if (z < 0.0) throw std::domain_error("xn_pdf: z must be >= 0");
    return std::exp(-z);
}

double yn_pdf(double y) { return 0.5 * std::exp(-std::fabs(y)); }

double x_pdf(double x, int n) {
    if (n < 1) throw std::domain_error("x_pdf: n must be >= 1");
    if (x < 0.0) throw std::domain_error("x_pdf: x must be >= 0");
    return gamma_pdf(x, double(n), 1.0);
}

double x_cdf(double u, int n) {
    if (n < 1) throw std::domain_error("x_cdf: n must be >= 1");
    if (u < 0.0) throw std::domain_error("x_cdf: u must be >= 0");
    if (u == 0.0) return 0.0;
    // 1 - e^{-u} sum_{j<n} u^j/j!, accumulated forward (all terms positive)
    double term = 1.0, sum = 1.0;
    for (int j = 1; j < n; ++j) {
        term *= u / double(j);
        sum += term;
    }
    const double q = sum * std::exp(-u);
    return q >= 1.0 ? 0.0 : 1.0 - q;
}

double y_pdf(double y, int n) {
    if (n < 1) throw std::domain_error("y_pdf: n must be >= 1");
    const double ay = std::fabs(y);
    if (n == 1) return 0.5 * std::exp(-ay);
    const double lg_n = ln_gamma(double(n));
    double sum = 0.0;
    for (int m = 0; m <= n - 1; ++m) {
        // (n-1+m)! |y|^{n-1-m} / (2^m m! (n-1-m)!), in log space
        const int p = n - 1 - m;
        double lt = ln_gamma(double(n + m)) - double(m) * M_LN2 - ln_gamma(double(m) + 1.0) -
                    ln_gamma(double(p) + 1.0);
        if (p > 0) {
            if (ay == 0.0) continue;
            lt += double(p) * std::log(ay);
        }
        sum += std::exp(lt - ay - double(n) * M_LN2 - lg_n);
    }
    return sum;
}

double y2_pdf(double v, int n) {
    if (!(v > 0.0)) throw std::domain_error("y2_pdf: v must be > 0");
    const double r = std::sqrt(v);
    return y_pdf(r, n) / r;
}

double y2_weight_substituted(double u, int n) { return 2.0 * y_pdf(u, n); }

double rayleigh_pdf(double r, double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("rayleigh_pdf: sigma must be > 0");
    if (r < 0.0) return 0.0;
    const double s2 = sigma * sigma;
    return r / s2 * std::exp(-0.5 * r * r / s2);
}

double rayleigh_cdf(double r, double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("rayleigh_cdf: sigma must be > 0");
    if (r <= 0.0) return 0.0;
    return -std::expm1(-0.5 * r * r / (sigma * sigma));
}

}  // namespace irslab
