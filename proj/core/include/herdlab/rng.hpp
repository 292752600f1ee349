#pragma once

#include <array>
#include <cstdint>

namespace herdlab {

/// Deterministic counter-free PRNG for simulation streams (xoshiro256++,
/// seeded through SplitMix64).  Not std::mt19937 on purpose: the standard
/// distributions are implementation-defined, and ensemble reproducibility
/// requires every draw to be bit-stable for a given (seed, stream) pair on a
/// given build.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    /// Independent stream for trajectory `stream` of a run seeded with
    /// `seed`.  The derivation is a pure function of (seed, stream), so
    /// results do not depend on scheduling or worker count.
    static Rng for_stream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform();

    /// Uniform on (0, 1]; safe as a log() argument.
    double uniform_open();

    /// Standard normal draw (Marsaglia polar; second value cached).
    double normal();

    /// Exponential waiting time with the given rate.
    double exponential(double rate);

  private:
    std::array<std::uint64_t, 4> state_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

/// SplitMix64 mixing function; used for seed expansion and stream derivation.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// Sub-seed for stream `index` of a run seeded with `seed`; pure function of
/// its arguments, so ensembles are invariant to execution order.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace herdlab
