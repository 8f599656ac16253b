// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
#pragma once

#include "irslab/quadrature.hpp"

namespace irslab {

/// Parameters of the surrogate-accuracy study: the per-path gamma shape
/// is perturbed to k' = k + epsilon/N (theta unchanged), mirroring what
/// rounding the aggregate shape to the nearest integer does per path.
struct KlSpec {
    int n_elements = 1;
    double epsilon = 0.0;  // in [-0.5, 0.5]

    void validate() const;
    double perturbed_shape() const;  // k + epsilon / N
};

/// Relative entropy (nats) of the double-Rayleigh density x K0(x) from
/// the gamma(k', theta) surrogate. Nonnegative; epsilon = 0 gives the
/// N-independent base divergence of the surrogate itself.
double kl_double_rayleigh_vs_gamma(const KlSpec& spec, const QuadratureSpec& quad);

struct KlResult {
    double nats = 0.0;
    bool saturated = false;  // divergent case: nats is +infinity
};

/// Relative entropy of Student-t with n degrees of freedom from the
/// standard normal. The integral diverges for n <= 2 (infinite second
/// moment); those return {+infinity, saturated = true}.
KlResult kl_student_t_vs_normal(int n, const QuadratureSpec& quad);

/// Joint density of the per-element components (X_n, Y_n):
/// (1/pi) K0(sqrt(x^2 + y^2)) on the half plane x >= 0.
double joint_pdf_xy(double x, double y);

/// Differential entropy (nats) of the joint law, by radial quadrature
/// of the polar form (the angular integral is exact by symmetry).
double joint_entropy_xy(const QuadratureSpec& quad);

/// I(X_n; Y_n) = h(X_n) + h(Y_n) - h(X_n, Y_n), with h(X_n) = 1 and
/// h(Y_n) = 1 + ln 2 exact.
double mutual_information_xy(const QuadratureSpec& quad);

}  // namespace irslab
