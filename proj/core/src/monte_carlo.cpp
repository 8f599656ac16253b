// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors

#include "irslab/monte_carlo.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace irslab {

void McConfig::validate() const {
    if (n_samples < 1) throw std::invalid_argument("McConfig: n_samples must be >= 1");
    if (n_streams < 1) throw std::invalid_argument("McConfig: n_streams must be >= 1");
}

namespace {

inline double rayleigh_draw(double sigma, SampleUniforms& stream) {
    return sigma * std::sqrt(-2.0 * std::log(stream.next()));
}

}  // namespace

double sample_H(int n, double sigma_d, SampleUniforms& stream) {
    if (n < 0) throw std::domain_error("sample_H: n must be >= 0");
    if (sigma_d < 0.0) throw std::domain_error("sample_H: sigma_d must be >= 0");
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rayleigh_draw(1.0, stream) * rayleigh_draw(1.0, stream);
    return sum + rayleigh_draw(sigma_d, stream);
}

double sample_G2(int n, double sigma_d, SampleUniforms& stream) {
    if (n < 1) throw std::domain_error("sample_G2: n must be >= 1");
    if (sigma_d < 0.0) throw std::domain_error("sample_G2: sigma_d must be >= 0");
    double x = 0.0, y = 0.0;
    for (int i = 0; i < n; ++i) {
        const double amp = rayleigh_draw(1.0, stream) * rayleigh_draw(1.0, stream);
        const double phi = M_PI * (stream.next() - 0.5);
        x += amp * std::cos(phi);
        y += amp * std::sin(phi);
    }
    const double re = x + rayleigh_draw(sigma_d, stream);
    return re * re + y * y;
}

namespace {

constexpr std::uint64_t kChunk = 1u << 16;

std::uint64_t count_chunk(PhaseMode mode, const SystemConfig& cfg, double threshold,
                          std::uint64_t seed, std::uint64_t stream_id, std::uint64_t first,
                          std::uint64_t last) {
    std::uint64_t hits = 0;
    for (std::uint64_t s = first; s < last; ++s) {
        SampleUniforms u(seed, stream_id, s);
        const double stat = mode == PhaseMode::perfect ? sample_H(cfg.n_elements, cfg.sigma_d, u)
                                                       : sample_G2(cfg.n_elements, cfg.sigma_d, u);
        if (stat < threshold) ++hits;
    }
    return hits;
}

McEstimate estimate_point(PhaseMode mode, const SystemConfig& cfg, double threshold,
                          const McConfig& mc, std::uint64_t stream_id) {
    const std::uint64_t n = mc.n_samples;
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> hits{0};
    const auto worker = [&]() {
        std::uint64_t local = 0;
        for (;;) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            const std::uint64_t first = c * kChunk;
            if (first >= n) break;
            local += count_chunk(mode, cfg, threshold, mc.seed, stream_id, first,
                                 std::min(first + kChunk, n));
        }
        hits.fetch_add(local);
    };
    if (mc.n_streams == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(size_t(mc.n_streams));
        for (int i = 0; i < mc.n_streams; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    McEstimate est;
    est.n_samples = n;
    est.seed = mc.seed;
    est.p_hat = double(hits.load()) / double(n);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / double(n));
    return est;
}

}  // namespace

std::vector<McEstimate> mc_outage(PhaseMode mode, const SystemConfig& cfg, const McConfig& mc) {
    cfg.validate();
    mc.validate();
    std::vector<McEstimate> out;
    out.reserve(cfg.gamma_t_grid_db.size());
    for (size_t i = 0; i < cfg.gamma_t_grid_db.size(); ++i) {
        // N = 0: both modes degenerate to the direct-only amplitude test.
        const PhaseMode effective = cfg.n_elements == 0 ? PhaseMode::perfect : mode;
        const double thr = gain_threshold(cfg.gamma_th_db, cfg.gamma_t_grid_db[i], effective);
        const std::uint64_t stream_id = (std::uint64_t(mode == PhaseMode::one_bit ? 1 : 0) << 32) | i;
        out.push_back(estimate_point(effective, cfg, thr, mc, stream_id));
    }
    return out;
}

OutageCurve mc_outage_curve(PhaseMode mode, const SystemConfig& cfg, const McConfig& mc) {
    const auto ests = mc_outage(mode, cfg, mc);
    OutageCurve curve;
    curve.method = mode == PhaseMode::perfect ? OutageMethod::mc_perfect : OutageMethod::mc_one_bit;
    curve.n_elements = cfg.n_elements;
    curve.sigma_d = cfg.sigma_d;
    curve.gamma_th_db = cfg.gamma_th_db;
    curve.mc_samples = mc.n_samples;
    curve.mc_seed = mc.seed;
    curve.points.reserve(ests.size());
    for (size_t i = 0; i < ests.size(); ++i) {
        OutagePoint pt;
        pt.gamma_t_db = cfg.gamma_t_grid_db[i];
        pt.p_out = ests[i].p_hat;
        pt.std_err = ests[i].std_err;
        curve.points.push_back(std::move(pt));
    }
    return curve;
}

}  // namespace irslab
