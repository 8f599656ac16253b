// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
#pragma once

namespace irslab {

/// Shape/scale pair of the gamma stand-in for the product of two
/// unit-scale Rayleigh magnitudes. For the moment-matched surrogate
/// k*theta == pi/2 (mean) and k(k+1)theta^2 == 4 (second moment).
struct GammaShapeScale {
    double k = 0.0;
    double theta = 0.0;
};

/// The moment-matched surrogate: k = pi^2/(16-pi^2), theta = (16-pi^2)/(2 pi).
GammaShapeScale gamma_surrogate();

/// Density of the product of two independent unit-scale Rayleigh
/// magnitudes: f(x) = x K0(x), x >= 0 (0 at the origin by continuity).
double double_rayleigh_pdf(double x);

/// Gamma density with given shape/scale (log-space evaluation).
double gamma_pdf(double x, double shape, double scale);

/// Density of the sum of n i.i.d. surrogate-gamma path gains:
/// gamma with shape n*k and scale theta.
double sum_s_pdf(double x, int n);

/// Density of cos(phi), phi uniform on [-pi/2, pi/2]:
/// 2/(pi sqrt(1-x^2)) on [0, 1], zero elsewhere (+inf at x == 1).
double cos_phase_pdf(double x);

/// Per-element in-phase component: unit exponential, z >= 0.
double xn_pdf(double z);

/// Per-element quadrature component: unit Laplace.
double yn_pdf(double y);

/// Sum of n in-phase components: Erlang(n) with unit rate.
double x_pdf(double x, int n);
double x_cdf(double u, int n);

/// Sum of n quadrature components (n-fold Laplace convolution),
/// evaluated by stable log-space term accumulation.
double y_pdf(double y, int n);

/// Density of the squared quadrature sum; integrable 1/sqrt(v)
/// singularity at v -> 0 for every n.
double y2_pdf(double v, int n);

/// Substituted form for integrators: with y = u^2,
/// int f_{Y^2}(y) g(y) dy == int y2_weight_substituted(u, n) g(u^2) du
/// and the weight 2 f_Y(u) is regular at u = 0.
double y2_weight_substituted(double u, int n);

/// Rayleigh density/CDF with scale sigma.
double rayleigh_pdf(double r, double sigma);
double rayleigh_cdf(double r, double sigma);

}  // namespace irslab
