// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors

#include "irslab/asymptotics.hpp"

#include <cmath>
#include <vector>

#include "irslab/specfun.hpp"

namespace irslab {

double f_S_leading(double x, int n) {
    if (n < 1) throw std::domain_error("f_S_leading: n must be >= 1");
    if (!(x > 0.0)) throw std::domain_error("f_S_leading: x must be > 0");
    if (x >= 1.0) throw std::domain_error("f_S_leading: x must be < 1 (log factor changes sign)");
    const double ln_x = std::log(x);
    return std::exp((2.0 * n - 1.0) * ln_x + double(n) * std::log(-ln_x) - ln_gamma(2.0 * n));
}

double cdf_H_leading(double t, int n, double sigma_d) {
    if (n < 1) throw std::domain_error("cdf_H_leading: n must be >= 1");
    if (!(sigma_d > 0.0)) throw std::domain_error("cdf_H_leading: sigma_d must be > 0");
    if (!(t > 0.0)) throw std::domain_error("cdf_H_leading: t must be > 0");
    if (t >= 1.0) throw std::domain_error("cdf_H_leading: t must be < 1 (log factor changes sign)");
    const double ln_t = std::log(t);
    const double nn = double(n);
    const double ln_den = std::log(4.0 * sigma_d * sigma_d * nn * (nn + 1.0) * (2.0 * nn + 1.0)) +
                          ln_gamma(2.0 * nn);
    return std::exp(2.0 * (nn + 1.0) * ln_t + nn * std::log(-ln_t) - ln_den);
}

double cdf_G2_leading(double t, int n, double sigma_d) {
    if (n < 1) throw std::domain_error("cdf_G2_leading: n must be >= 1");
    if (!(sigma_d > 0.0)) throw std::domain_error("cdf_G2_leading: sigma_d must be > 0");
    if (!(t > 0.0)) throw std::domain_error("cdf_G2_leading: t must be > 0");
    const double nn = double(n);
    const double ln_coeff = ln_gamma(0.5 * nn + 2.0) + ln_gamma(nn - 0.5) -
                            std::log(2.0 * sigma_d * sigma_d) - ln_gamma(nn) - ln_gamma(nn + 3.0) -
                            ln_gamma(0.5 * (nn + 5.0));
    return std::exp(0.5 * (nn + 3.0) * std::log(t) + ln_coeff);
}

Rational diversity_order(PhaseMode mode, int n) {
    if (n < 1) throw std::domain_error("diversity_order: n must be >= 1");
    if (mode == PhaseMode::perfect) return {n + 1, 1};
    if ((n + 3) % 2 == 0) return {(n + 3) / 2, 1};
    return {n + 3, 2};
}

double estimate_slope(const OutageCurve& curve, std::pair<double, double> fit_range_db) {
    const double lo = std::min(fit_range_db.first, fit_range_db.second);
    const double hi = std::max(fit_range_db.first, fit_range_db.second);
    std::vector<std::pair<double, double>> pts;  // (log10 gamma_t, log10 p)
    for (const auto& p : curve.points) {
        if (!p.error.empty()) continue;
        if (p.gamma_t_db < lo || p.gamma_t_db > hi) continue;
        if (!(p.p_out > 0.0)) continue;
        pts.emplace_back(p.gamma_t_db / 10.0, std::log10(p.p_out));
    }
    if (pts.size() < 2)
        throw InsufficientPointsError("estimate_slope: need at least 2 positive points in range, have " +
                                      std::to_string(pts.size()));
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double nn = double(pts.size());
    const double denom = nn * sxx - sx * sx;
    if (denom == 0.0) throw InsufficientPointsError("estimate_slope: degenerate abscissae");
    return -(nn * sxy - sx * sy) / denom;
}

}  // namespace irslab
