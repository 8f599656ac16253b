// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors

#include "irslab/outage.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "irslab/asymptotics.hpp"
#include "irslab/distributions.hpp"
#include "irslab/specfun.hpp"

namespace irslab {

namespace {

std::mutex g_warn_mutex;
WarningHandler g_warn_handler = [](const std::string& msg) { std::cerr << "irslab: warning: " << msg << "\n"; };

void warn(const std::string& msg) {
    std::lock_guard<std::mutex> lock(g_warn_mutex);
    if (g_warn_handler) g_warn_handler(msg);
}

// Probabilities assembled from approximate expansions can exit [0,1] by
// rounding; clamp, and surface anything beyond noise level.
double clamp_probability(double raw, const char* where) {
    if (raw < -1e-6 || raw > 1.0 + 1e-6)
        warn(std::string(where) + ": clamping out-of-range probability " + std::to_string(raw));
    return std::min(1.0, std::max(0.0, raw));
}

double ln_binomial(int n, int i) {
    return ln_gamma(double(n) + 1.0) - ln_gamma(double(i) + 1.0) - ln_gamma(double(n - i) + 1.0);
}

// Signed accumulation of exp(ln_mag) contributions in extended precision.
struct SignedLogSum {
    long double sum = 0.0L;
    void add(double sign, double ln_mag) {
        if (sign == 0.0 || ln_mag == -std::numeric_limits<double>::infinity()) return;
        sum += static_cast<long double>(sign) * std::exp(static_cast<long double>(ln_mag));
    }
    double value() const { return static_cast<double>(sum); }
};

// E_i of the closed form: the antiderivative -(1/2) b^{-s} Gamma(s, b n^2)
// of n^i exp(-b n^2) holds on n > 0 only for even i, so a shifted range
// [-m, t-m] crossing the origin needs the even-i split.
double lemma2_e_term(int i, double b, double m, double second_arg) {
    const double s = 0.5 * (double(i) + 1.0);
    const double first_arg = b * m * m;
    if (m > 0.0 && i % 2 == 0)
        return 2.0 * std::exp(ln_gamma(s)) - upper_incomplete_gamma(s, first_arg) -
               upper_incomplete_gamma(s, second_arg);
    return upper_incomplete_gamma(s, first_arg) - upper_incomplete_gamma(s, second_arg);
}

int rounded_shape_of(int n) {
    const auto g = gamma_surrogate();
    const int shape = int(std::lround(double(n) * g.k));
    if (shape < 1) throw std::logic_error("rounded gamma shape < 1");  // cannot happen for n >= 1
    return shape;
}

}  // namespace

void set_warning_handler(WarningHandler handler) {
    std::lock_guard<std::mutex> lock(g_warn_mutex);
    g_warn_handler = std::move(handler);
}

double lemma1_cdf(const std::function<double(double)>& f_q, const std::function<double(double)>& cdf_q,
                  double sigma, double z, const QuadratureSpec& spec) {
    if (!(sigma > 0.0)) throw std::domain_error("lemma1_cdf: sigma must be > 0");
    if (z < 0.0) throw std::domain_error("lemma1_cdf: z must be >= 0");
    if (z == 0.0) return 0.0;
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    const auto integrand = [&](double q) {
        const double d = z - q;
        return f_q(q) * std::exp(-d * d * inv2s2);
    };
    // Split geometrically toward the origin: densities concentrated near
    // zero (the point-mass limit) would otherwise slip between the nodes
    // of a single adaptive pass over [0, z].
    QuadratureSpec piece = spec;
    piece.abs_tol = spec.abs_tol / 4.0;
    double integral = 0.0;
    double lo = 0.0;
    for (const double frac : {1e-9, 1e-6, 1e-3, 1.0}) {
        const double hi = z * frac;
        integral += integrate(integrand, lo, hi, piece).value;
        lo = hi;
    }
    const double raw = cdf_q(z) - integral;
    return clamp_probability(raw, "lemma1_cdf");
}

double lemma2_integral(int power, double a, double b, double t, Lemma2Mode mode, const QuadratureSpec& spec) {
    if (power < 0) throw std::domain_error("lemma2_integral: power must be >= 0");
    if (!(b > 0.0)) throw std::domain_error("lemma2_integral: b must be > 0");
    if (t < 0.0) throw std::domain_error("lemma2_integral: t must be >= 0");
    if (t == 0.0) return 0.0;

    if (mode == Lemma2Mode::quadrature) {
        const auto integrand = [&](double x) {
            const double d = t - x;
            return std::pow(x, double(power)) * std::exp(-a * x - b * d * d);
        };
        return integrate(integrand, 0.0, t, spec).value;
    }

    const double m = (2.0 * b * t - a) / (2.0 * b);
    const double second_arg = b * (t - m) * (t - m);
    const double ln_pref = (a * a - 4.0 * a * b * t) / (4.0 * b) - M_LN2;
    const double ln_b = std::log(b);
    SignedLogSum sum;
    for (int i = 0; i <= power; ++i) {
        const double e = lemma2_e_term(i, b, m, second_arg);
        if (e == 0.0) continue;
        const int p = power - i;
        if (m == 0.0 && p > 0) continue;
        double ln_mag = ln_pref + ln_binomial(power, i) - 0.5 * (double(i) + 1.0) * ln_b +
                        std::log(std::fabs(e));
        double sign = e > 0.0 ? 1.0 : -1.0;
        if (p > 0) {
            ln_mag += double(p) * std::log(std::fabs(m));
            if (m < 0.0 && p % 2 == 1) sign = -sign;
        }
        sum.add(sign, ln_mag);
    }
    return sum.value();
}

Prop1Terms prop1_terms(double t, int n, double sigma_d) {
    if (n < 1) throw std::domain_error("prop1_terms: n must be >= 1");
    if (!(sigma_d > 0.0)) throw std::domain_error("prop1_terms: sigma_d must be > 0");
    const auto g = gamma_surrogate();
    Prop1Terms terms;
    terms.rounded_shape = rounded_shape_of(n);
    terms.a = 1.0 / g.theta;
    terms.b = 1.0 / (2.0 * sigma_d * sigma_d);
    terms.shift = t - sigma_d * sigma_d / g.theta;
    terms.prefactor = std::exp(sigma_d * sigma_d / (2.0 * g.theta * g.theta) - t / g.theta -
                               ln_gamma(double(terms.rounded_shape)) -
                               double(terms.rounded_shape) * std::log(g.theta));
    const double second_arg = sigma_d * sigma_d / (2.0 * g.theta * g.theta);
    terms.coeffs.reserve(size_t(terms.rounded_shape));
    for (int i = 0; i < terms.rounded_shape; ++i) {
        const double e = lemma2_e_term(i, terms.b, terms.shift, second_arg);
        terms.coeffs.push_back(std::pow(2.0, 0.5 * (double(i) - 1.0)) *
                               std::pow(sigma_d, double(i) + 1.0) * e);
    }
    return terms;
}

namespace {

// Closed-form F_H with integer gamma shape K for the reflected sum.
double cdf_h_prop1(double t, int n, double sigma_d) {
    if (t == 0.0) return 0.0;
    const auto g = gamma_surrogate();
    const int shape = rounded_shape_of(n);
    const double b = 1.0 / (2.0 * sigma_d * sigma_d);
    const double m = t - sigma_d * sigma_d / g.theta;
    const double second_arg = sigma_d * sigma_d / (2.0 * g.theta * g.theta);
    const double ln_a = second_arg - t / g.theta - ln_gamma(double(shape)) -
                        double(shape) * std::log(g.theta);
    const double ln_sigma = std::log(sigma_d);
    const int power = shape - 1;

    SignedLogSum correction;
    for (int i = 0; i <= power; ++i) {
        const double e = lemma2_e_term(i, b, m, second_arg);
        if (e == 0.0) continue;
        const int p = power - i;
        if (m == 0.0 && p > 0) continue;
        double ln_mag = ln_a + ln_binomial(power, i) + 0.5 * (double(i) - 1.0) * M_LN2 +
                        (double(i) + 1.0) * ln_sigma + std::log(std::fabs(e));
        double sign = e > 0.0 ? 1.0 : -1.0;
        if (p > 0) {
            ln_mag += double(p) * std::log(std::fabs(m));
            if (m < 0.0 && p % 2 == 1) sign = -sign;
        }
        correction.add(sign, ln_mag);
    }
    const double f_s = regularized_gamma_p(double(shape), t / g.theta);
    return clamp_probability(f_s - correction.value(), "cdf_H(prop1)");
}

}  // namespace

double cdf_h_gamma_model(double t, double shape, double sigma_d, const QuadratureSpec& spec) {
    if (!(shape > 0.0)) throw std::domain_error("cdf_h_gamma_model: shape must be > 0");
    if (!(sigma_d > 0.0)) throw std::domain_error("cdf_h_gamma_model: sigma_d must be > 0");
    if (t < 0.0) throw std::domain_error("cdf_h_gamma_model: t must be >= 0");
    if (t == 0.0) return 0.0;
    const double theta = gamma_surrogate().theta;
    const auto f_s = [&](double r) { return gamma_pdf(r, shape, theta); };
    const auto cdf_s = [&](double z) { return regularized_gamma_p(shape, z / theta); };
    return lemma1_cdf(f_s, cdf_s, sigma_d, t, spec);
}

double cdf_H(double t, int n, double sigma_d, const QuadratureSpec& spec, CdfHMode mode) {
    if (n < 1) throw std::domain_error("cdf_H: n must be >= 1");
    if (!(sigma_d > 0.0)) throw std::domain_error("cdf_H: sigma_d must be > 0");
    if (t < 0.0) throw std::domain_error("cdf_H: t must be >= 0");
    switch (mode) {
        case CdfHMode::prop1_closed:
            return cdf_h_prop1(t, n, sigma_d);
        case CdfHMode::lemma1_quadrature:
            return cdf_h_gamma_model(t, double(rounded_shape_of(n)), sigma_d, spec);
        case CdfHMode::lemma1_exact_shape:
            return cdf_h_gamma_model(t, double(n) * gamma_surrogate().k, sigma_d, spec);
    }
    throw std::logic_error("cdf_H: bad mode");
}

namespace {

// P(X + R < tau): Erlang(n) plus Rayleigh(sigma_d), closed form with the
// same origin-split E_i, a = 1 (unit rate), b = 1/(2 sigma_d^2).
double erlang_rayleigh_sum_cdf(double tau, int n, double sigma_d) {
    if (tau <= 0.0) return 0.0;
    const double b = 1.0 / (2.0 * sigma_d * sigma_d);
    const double m = tau - sigma_d * sigma_d;
    const double second_arg = 0.5 * sigma_d * sigma_d;
    const double ln_a = 0.5 * (sigma_d * sigma_d - 2.0 * tau);
    const double ln_sigma = std::log(sigma_d);
    SignedLogSum correction;
    for (int i = 0; i < n; ++i) {
        const double e = lemma2_e_term(i, b, m, second_arg);
        if (e == 0.0) continue;
        const int p = n - 1 - i;
        if (m == 0.0 && p > 0) continue;
        double ln_mag = ln_a + 0.5 * (double(i) - 1.0) * M_LN2 + (double(i) + 1.0) * ln_sigma +
                        std::log(std::fabs(e)) - ln_gamma(double(p) + 1.0) - ln_gamma(double(i) + 1.0);
        double sign = e > 0.0 ? 1.0 : -1.0;
        if (p > 0) {
            ln_mag += double(p) * std::log(std::fabs(m));
            if (m < 0.0 && p % 2 == 1) sign = -sign;
        }
        correction.add(sign, ln_mag);
    }
    return x_cdf(tau, n) - correction.value();
}

}  // namespace

double cdf_G2(double t, int n, double sigma_d, const QuadratureSpec& spec) {
    if (n < 1) throw std::domain_error("cdf_G2: n must be >= 1");
    if (!(sigma_d > 0.0)) throw std::domain_error("cdf_G2: sigma_d must be > 0");
    if (t < 0.0) throw std::domain_error("cdf_G2: t must be >= 0");
    if (t == 0.0) return 0.0;
    const double root = std::sqrt(t);
    const auto integrand = [&](double u) {
        const double rem = std::max(t - u * u, 0.0);
        return y2_weight_substituted(u, n) * erlang_rayleigh_sum_cdf(std::sqrt(rem), n, sigma_d);
    };
    const double raw = integrate(integrand, 0.0, root, spec).value;
    return clamp_probability(raw, "cdf_G2");
}

double clt_outage_perfect(const SystemConfig& cfg, double gamma_t_db) {
    cfg.validate();
    const double t = gain_threshold(cfg.gamma_th_db, gamma_t_db, PhaseMode::perfect);
    const double n = double(cfg.n_elements);
    const double mean = n * M_PI / 2.0 + cfg.sigma_d * std::sqrt(M_PI / 2.0);
    const double var = n * (4.0 - M_PI * M_PI / 4.0) + cfg.sigma_d * cfg.sigma_d * (2.0 - M_PI / 2.0);
    const double z = (t - mean) / std::sqrt(var);
    return 0.5 * std::erfc(-z / M_SQRT2);
}

namespace {

double direct_only_outage(const SystemConfig& cfg, double gamma_t_db) {
    const double ratio = db_to_linear(cfg.gamma_th_db - gamma_t_db);
    return -std::expm1(-ratio / (2.0 * cfg.sigma_d * cfg.sigma_d));
}

double engine_point(OutageMethod method, const SystemConfig& cfg, double gamma_t_db,
                    const QuadratureSpec& spec) {
    if (cfg.n_elements == 0) return direct_only_outage(cfg, gamma_t_db);
    switch (method) {
        case OutageMethod::perfect:
            return cdf_H(gain_threshold(cfg.gamma_th_db, gamma_t_db, PhaseMode::perfect), cfg.n_elements,
                         cfg.sigma_d, spec, CdfHMode::prop1_closed);
        case OutageMethod::one_bit:
            return cdf_G2(gain_threshold(cfg.gamma_th_db, gamma_t_db, PhaseMode::one_bit), cfg.n_elements,
                          cfg.sigma_d, spec);
        case OutageMethod::clt_perfect:
            return clt_outage_perfect(cfg, gamma_t_db);
        case OutageMethod::asymptotic_perfect:
            return cdf_H_leading(gain_threshold(cfg.gamma_th_db, gamma_t_db, PhaseMode::perfect),
                                 cfg.n_elements, cfg.sigma_d);
        case OutageMethod::asymptotic_one_bit:
            return cdf_G2_leading(gain_threshold(cfg.gamma_th_db, gamma_t_db, PhaseMode::one_bit),
                                  cfg.n_elements, cfg.sigma_d);
        default:
            throw std::invalid_argument("outage: Monte-Carlo methods are computed by mc_outage");
    }
}

}  // namespace

OutageCurve outage(OutageMethod method, const SystemConfig& cfg, const QuadratureSpec& spec) {
    cfg.validate();
    spec.validate();
    OutageCurve curve;
    curve.method = method;
    curve.n_elements = cfg.n_elements;
    curve.sigma_d = cfg.sigma_d;
    curve.gamma_th_db = cfg.gamma_th_db;
    curve.points.reserve(cfg.gamma_t_grid_db.size());
    for (const double gt : cfg.gamma_t_grid_db) {
        OutagePoint pt;
        pt.gamma_t_db = gt;
        try {
            pt.p_out = engine_point(method, cfg, gt, spec);
        } catch (const std::exception& ex) {
            pt.p_out = std::numeric_limits<double>::quiet_NaN();
            pt.error = ex.what();
        }
        curve.points.push_back(std::move(pt));
    }
    return curve;
}

}  // namespace irslab
