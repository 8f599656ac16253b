// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace irslab {

/// Computation route behind an outage curve.
enum class OutageMethod {
    perfect,             // closed-form CDF of the co-phased channel sum
    one_bit,             // quadrature CDF of |G|^2 under one-bit phase error
    clt_perfect,         // Gaussian moment-matched baseline (perfect mode)
    asymptotic_perfect,  // small-threshold leading term, perfect mode
    asymptotic_one_bit,  // small-threshold leading term, one-bit mode
    mc_perfect,          // Monte-Carlo estimate, perfect mode
    mc_one_bit,          // Monte-Carlo estimate, one-bit mode
};

std::string method_name(OutageMethod m);

struct OutagePoint {
    double gamma_t_db = 0.0;
    double p_out = 0.0;
    std::optional<double> std_err;  // Monte-Carlo methods only
    std::string error;              // non-empty when the engine failed here
};

struct OutageCurve {
    OutageMethod method = OutageMethod::perfect;
    int n_elements = 0;
    double sigma_d = 1.0;
    double gamma_th_db = 0.0;
    std::vector<OutagePoint> points;
    // Monte-Carlo provenance (mc_* methods only)
    std::optional<std::uint64_t> mc_samples;
    std::optional<std::uint64_t> mc_seed;
};

}  // namespace irslab
