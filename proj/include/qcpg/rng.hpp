#pragma once

#include <cstdint>

namespace qcpg {

/// SplitMix64: tiny, well-mixed 64-bit generator used for seeding and for
/// counter-derived per-trial streams.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

/// Per-trial random stream. The state is a pure function of
/// (master seed, trial index), which makes every trial reproducible
/// independently of how trials are distributed over workers.
///
/// Gaussians use the Marsaglia polar method: draw u,v uniform in (-1,1)
/// until s = u^2+v^2 lands in (0,1), then return u*sqrt(-2 ln(s)/s) and cache
/// the v-branch for the next call. Only sqrt/log enter, and the draw order is
/// fixed, so a stream is fully determined by its seed pair.
class TrialRng {
  public:
    TrialRng(std::uint64_t master_seed, std::uint64_t trial_index);

    std::uint64_t next_u64() { return gen_.next(); }
    double next_unit() { return gen_.next_unit(); }
    double next_gaussian();

  private:
    SplitMix64 gen_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace qcpg
