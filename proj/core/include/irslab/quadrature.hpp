// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
#pragma once

#include <functional>
#include <stdexcept>

namespace irslab {

/// Tolerances and subdivision limit governing every numeric integral.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 200;

    void validate() const;  // throws std::invalid_argument on bad fields
};

/// Default spec; honours the IRSLAB_QUAD_TOL environment variable
/// (overrides abs_tol when set to a positive number).
QuadratureSpec default_quadrature_spec();

/// Thrown when the adaptive scheme cannot reach the requested tolerance.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double value, double abs_error)
        : std::runtime_error(what), value_(value), abs_error_(abs_error) {}
    double value() const { return value_; }
    double achieved_abs_error() const { return abs_error_; }

  private:
    double value_;
    double abs_error_;
};

struct IntegralResult {
    double value = 0.0;
    double abs_error = 0.0;
};

using Integrand = std::function<double(double)>;

/// Adaptive integration on [a, b] (Gauss-Kronrod with extrapolation;
/// integrable endpoint singularities are handled).
IntegralResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec);

/// Adaptive integration on [a, +inf).
IntegralResult integrate_to_inf(const Integrand& f, double a, const QuadratureSpec& spec);

}  // namespace irslab
