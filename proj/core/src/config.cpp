#include "herdlab/config.hpp"

#include <cmath>

#include "herdlab/errors.hpp"

namespace herdlab {

void SimulationConfig::validate() const {
    if (!(total_time > 0.0)) {
        throw ConfigError("sim.total_time: must be > 0");
    }
    if (burn_in < 0.0 || !(burn_in < total_time)) {
        throw ConfigError("sim.burn_in: must satisfy 0 <= burn_in < total_time");
    }
    if (!(sample_interval > 0.0)) {
        throw ConfigError("sim.sample_interval: must be > 0");
    }
    if (!(base_step > 0.0)) {
        throw ConfigError("sim.base_step: must be > 0");
    }
    if (sample_interval < base_step) {
        throw ConfigError("sim.sample_interval: must be >= sim.base_step");
    }
    if (n_trajectories < 1) {
        throw ConfigError("sim.n_trajectories: must be >= 1");
    }
    if (!(x_floor > 0.0) || x_floor >= 0.5) {
        throw ConfigError("sim.x_floor: must lie in (0, 0.5)");
    }
    if (max_floor_fraction <= 0.0 || max_floor_fraction > 1.0) {
        throw ConfigError("sim.max_floor_fraction: must lie in (0, 1]");
    }
}

std::uint64_t SimulationConfig::samples_per_trajectory() const {
    const double span = total_time - burn_in;
    const auto n = static_cast<std::int64_t>(std::floor(span / sample_interval + 1e-9));
    return n > 0 ? static_cast<std::uint64_t>(n) : 0;
}

}  // namespace herdlab
