#include "qcpg/rng.hpp"

#include <cmath>

namespace qcpg {

TrialRng::TrialRng(std::uint64_t master_seed, std::uint64_t trial_index)
    : gen_(0) {
    // Two mixing rounds decorrelate (seed, trial) pairs before the stream starts.
    SplitMix64 mixer(master_seed ^ (0x5851f42d4c957f2dULL * (trial_index + 1)));
    const std::uint64_t a = mixer.next();
    const std::uint64_t b = mixer.next();
    gen_ = SplitMix64(a ^ (b + trial_index));
}

double TrialRng::next_gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    double u, v, s;
    do {
        u = 2.0 * gen_.next_unit() - 1.0;
        v = 2.0 * gen_.next_unit() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * f;
    has_cached_ = true;
    return u * f;
}

}  // namespace qcpg
