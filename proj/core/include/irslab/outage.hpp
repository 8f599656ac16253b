// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "irslab/channel.hpp"
#include "irslab/curve.hpp"
#include "irslab/quadrature.hpp"

namespace irslab {

/// Sink for non-fatal numeric warnings (CDF clamping and the like).
/// Default prints to stderr. Pass nullptr to silence.
using WarningHandler = std::function<void(const std::string&)>;
void set_warning_handler(WarningHandler handler);

/// CDF of Z = Q + R for a nonnegative Q (given by density/CDF) plus an
/// independent Rayleigh(sigma):
///   F_Z(z) = F_Q(z) - int_0^z f_Q(q) exp(-(z-q)^2 / (2 sigma^2)) dq.
double lemma1_cdf(const std::function<double(double)>& f_q, const std::function<double(double)>& cdf_q,
                  double sigma, double z, const QuadratureSpec& spec);

enum class Lemma2Mode { closed_form, quadrature };

/// J(I,a,b,t) = int_0^t x^I exp(-a x) exp(-b (t-x)^2) dx, b > 0, t >= 0.
/// closed_form evaluates the incomplete-gamma expansion around
/// m = (2bt - a)/(2b); quadrature integrates directly and is the reference.
/// For even powers the Gamma(s, b n^2) antiderivative of n^i exp(-b n^2)
/// is valid only on n > 0, so when the shifted range [-m, t-m] crosses the
/// origin (m > 0) the even-i terms are split there:
///   E_i = 2 Gamma(s) - Gamma(s, b m^2) - Gamma(s, b (t-m)^2),  s = (i+1)/2.
double lemma2_integral(int power, double a, double b, double t, Lemma2Mode mode, const QuadratureSpec& spec);

/// Assembled pieces of the closed-form CDF of the co-phased channel sum.
struct Prop1Terms {
    int rounded_shape = 0;   // round(N k), >= 1
    double a = 0.0;          // 1/theta
    double b = 0.0;          // 1/(2 sigma_d^2)
    double prefactor = 0.0;  // A(t)
    double shift = 0.0;      // m(t) = t - sigma_d^2/theta
    std::vector<double> coeffs;  // B_i, i = 0 .. rounded_shape-1
};
Prop1Terms prop1_terms(double t, int n, double sigma_d);

enum class CdfHMode {
    prop1_closed,        // closed form, shape round(N k)
    lemma1_quadrature,   // numeric reference, shape round(N k)
    lemma1_exact_shape,  // numeric reference, exact shape N k
};

/// CDF of H = S + R (perfect phase alignment) under the gamma model of S.
double cdf_H(double t, int n, double sigma_d, const QuadratureSpec& spec,
             CdfHMode mode = CdfHMode::prop1_closed);

/// Same numeric engine with a caller-chosen gamma shape for S (surrogate
/// scale theta); used by the rounding-sensitivity study.
double cdf_h_gamma_model(double t, double shape, double sigma_d, const QuadratureSpec& spec);

/// CDF of |G|^2 (one-bit phase error): outer integral over the squared
/// quadrature sum (u-substituted), closed-form inner CDF of X + R.
double cdf_G2(double t, int n, double sigma_d, const QuadratureSpec& spec);

/// Gaussian moment-matched baseline for the perfect mode.
double clt_outage_perfect(const SystemConfig& cfg, double gamma_t_db);

/// Sweep the configured gamma_t grid through the selected engine.
/// N = 0 short-circuits to the direct-only Rayleigh closed form.
/// Per-point engine failures are recorded in OutagePoint::error.
OutageCurve outage(OutageMethod method, const SystemConfig& cfg, const QuadratureSpec& spec);

}  // namespace irslab
