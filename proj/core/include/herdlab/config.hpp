#pragma once

#include <cstdint>

namespace herdlab {

/// Run-level simulation settings shared by all engines.  Times are in model
/// time (scaled time t_s for three-state runs).  base_step is the integrator
/// step before the inter-event-time scaling is applied.
struct SimulationConfig {
    double total_time = 1000.0;
    double burn_in = 100.0;
    double sample_interval = 0.1;
    double base_step = 1e-3;
    std::uint64_t seed = 1;
    std::uint32_t n_trajectories = 1;

    // Engine knobs with paper-independent defaults.
    double x_floor = 1e-6;            // clamp for price/tau evaluation
    double max_floor_fraction = 0.9;  // error out when exceeded
    bool reflect_boundaries = true;   // alternative: clamp to [floor, 1-floor]

    void validate() const;

    /// Number of samples a single trajectory produces: grid points
    /// burn_in + k*sample_interval, k = 1..n, within total_time.
    std::uint64_t samples_per_trajectory() const;
};

}  // namespace herdlab
