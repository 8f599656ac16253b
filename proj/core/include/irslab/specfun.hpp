// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
#pragma once

#include <cstdint>

namespace irslab {

/// Iteration/accuracy controls for the series and continued-fraction
/// evaluations below. All functions here are pure and thread-safe.
struct AccuracyBudget {
    double abs_tol = 1e-300;
    double rel_tol = 1e-14;
    int max_iter = 500;

    void validate() const;  // throws std::invalid_argument on bad fields
};

/// ln Gamma(a), a > 0. Lanczos approximation, relative error < 1e-13.
double ln_gamma(double a);

/// Upper incomplete gamma Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt,
/// a > 0, x >= 0 (not regularized). Gamma(a, 0) == Gamma(a).
double upper_incomplete_gamma(double a, double x, const AccuracyBudget& acc = {});

/// Regularized lower/upper incomplete gamma, P(a,x) + Q(a,x) == 1.
double regularized_gamma_p(double a, double x, const AccuracyBudget& acc = {});
double regularized_gamma_q(double a, double x, const AccuracyBudget& acc = {});

/// Modified Bessel functions of the second kind, orders 0 and 1, x > 0.
/// Relative error < 1e-12 for x in [1e-8, 700]; underflow to 0 beyond.
double bessel_k0(double x);
double bessel_k1(double x);

/// Binomial coefficient C(n, i), 0 <= i <= n. Exact 64-bit integer
/// arithmetic for n <= 60, ln_gamma otherwise.
double binomial(int n, int i);

}  // namespace irslab
