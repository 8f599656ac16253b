// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
#pragma once

#include <stdexcept>
#include <utility>

#include "irslab/channel.hpp"
#include "irslab/curve.hpp"

namespace irslab {

/// Exact rational (used for diversity orders).
struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return double(num) / double(den); }
};

/// Leading small-argument term of the reflected-sum density:
/// x^{2N-1} (ln(1/x))^N / (2N-1)!, valid on 0 < x < 1.
double f_S_leading(double x, int n);

/// Leading small-threshold term of the perfect-mode channel CDF:
/// t^{2(N+1)} (ln(1/t))^N / (4 sigma_d^2 N (N+1) (2N+1) (2N-1)!), 0 < t < 1.
double cdf_H_leading(double t, int n, double sigma_d);

/// Leading small-threshold term of the one-bit |G|^2 CDF (pure power law):
/// t^{(N+3)/2} Gamma(N/2+2) Gamma(N-1/2) / (2 sigma_d^2 Gamma(N) Gamma(N+3) Gamma((N+5)/2)).
double cdf_G2_leading(double t, int n, double sigma_d);

/// High-SNR slope: N+1 (perfect) or (N+3)/2 (one-bit), exact.
Rational diversity_order(PhaseMode mode, int n);

class InsufficientPointsError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Least-squares slope of log10 P versus log10 gamma_t over the given dB
/// window, negated. Uses points inside the window with p_out > 0 and no
/// engine error; throws InsufficientPointsError when fewer than two remain.
double estimate_slope(const OutageCurve& curve, std::pair<double, double> fit_range_db);

struct DiversityReport {
    PhaseMode mode = PhaseMode::perfect;
    int n_elements = 0;
    Rational theoretical_order;
    double fitted_slope = 0.0;
    std::pair<double, double> fit_range_db{0.0, 0.0};
    int n_points_used = 0;
};

}  // namespace irslab
