// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
#pragma once

#include <cstdint>
#include <vector>

#include "irslab/channel.hpp"
#include "irslab/curve.hpp"
#include "irslab/philox.hpp"

namespace irslab {

struct McConfig {
    std::uint64_t seed = 1;
    std::uint64_t n_samples = 1'000'000;
    int n_streams = 1;  // worker threads; estimates are invariant to this

    void validate() const;
};

struct McEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;  // sqrt(p(1-p)/n)
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
};

/// One draw of H = sum of N double-Rayleigh products plus Rayleigh(sigma_d).
double sample_H(int n, double sigma_d, SampleUniforms& stream);

/// One draw of |G|^2 with per-element phase error uniform on [-pi/2, pi/2]:
/// (X + R)^2 + Y^2.
double sample_G2(int n, double sigma_d, SampleUniforms& stream);

/// Outage frequency per grid point. Substream for point i is derived from
/// (seed, mode, i); averaging is over fixed sample indices, so the result
/// is bit-identical for any n_streams.
std::vector<McEstimate> mc_outage(PhaseMode mode, const SystemConfig& cfg, const McConfig& mc);

/// Same estimates packaged as an OutageCurve (method mc_perfect/mc_one_bit).
OutageCurve mc_outage_curve(PhaseMode mode, const SystemConfig& cfg, const McConfig& mc);

}  // namespace irslab
