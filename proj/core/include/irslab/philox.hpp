// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
#pragma once

#include <array>
#include <cstdint>

namespace irslab {

/// Philox4x64-10 counter-based generator (numpy-compatible constants).
/// A block maps a 256-bit counter and 128-bit key to four 64-bit words;
/// there is no hidden state, so any (counter, key) cell can be evaluated
/// independently and reproducibly.
struct Philox4x64 {
    using Counter = std::array<std::uint64_t, 4>;
    using Key = std::array<std::uint64_t, 2>;

    static constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ULL;
    static constexpr std::uint64_t kMult1 = 0xCA5A826395121157ULL;
    static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

    static Counter block(Counter ctr, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const unsigned __int128 p0 = static_cast<unsigned __int128>(kMult0) * ctr[0];
            const unsigned __int128 p1 = static_cast<unsigned __int128>(kMult1) * ctr[2];
            const std::uint64_t lo0 = static_cast<std::uint64_t>(p0);
            const std::uint64_t hi0 = static_cast<std::uint64_t>(p0 >> 64);
            const std::uint64_t lo1 = static_cast<std::uint64_t>(p1);
            const std::uint64_t hi1 = static_cast<std::uint64_t>(p1 >> 64);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }
};

/// Uniform draws for one Monte-Carlo sample. The counter layout is
/// (block-within-sample, sample index, substream, 0) with key (seed,
/// stream id); consecutive samples are independent cells, so estimates
/// do not depend on how samples are partitioned across threads.
class SampleUniforms {
  public:
    SampleUniforms(std::uint64_t seed, std::uint64_t stream, std::uint64_t sample,
                   std::uint64_t substream = 0)
        : key_{seed, stream}, ctr_{0, sample, substream, 0} {}

    /// Uniform on (0, 1] (never 0, safe under log).
    double next() {
        if (idx_ == 4) {
            ++ctr_[0];
            buf_ = Philox4x64::block(ctr_, key_);
            idx_ = 0;
        } else if (idx_ < 0) {
            buf_ = Philox4x64::block(ctr_, key_);
            idx_ = 0;
        }
        const std::uint64_t bits = buf_[idx_++];
        return (double(bits >> 11) + 1.0) * 0x1.0p-53;
    }

  private:
    Philox4x64::Key key_;
    Philox4x64::Counter ctr_;
    Philox4x64::Counter buf_{};
    int idx_ = -1;  // buffer not yet filled
};

}  // namespace irslab
