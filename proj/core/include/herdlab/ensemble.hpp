#pragma once

#include <variant>
#include <vector>

#include "herdlab/config.hpp"
#include "herdlab/sample_path.hpp"
#include "herdlab/three_state.hpp"
#include "herdlab/two_state.hpp"

namespace herdlab {

struct MicroRequest {
    TwoStateParams params;
};

struct TwoStateSdeRequest {
    EffectiveRates rates;
    double herding = 1.0;
};

struct ThreeStateRequest {
    ThreeStateParams params;
    InterventionSpec intervention;
};

using ModelRequest = std::variant<MicroRequest, TwoStateSdeRequest, ThreeStateRequest>;

/// Runs config.n_trajectories independent paths.  Trajectory i is seeded with
/// derive_stream_seed(config.seed, i), so the result is a pure function of
/// (request, config) regardless of worker count or scheduling.  Trajectory
/// failures propagate with the trajectory index prefixed to the message; the
/// lowest failing index wins.
std::vector<SamplePath> run_ensemble(const ModelRequest& request,
                                     const SimulationConfig& config);

/// Worker count used by run_ensemble: the HERDLAB_THREADS environment
/// variable when set (clamped to [1, 512]), hardware concurrency otherwise.
unsigned ensemble_worker_count();

/// Concatenates the primary column of every path, in trajectory order.
std::vector<double> pool_primary(const std::vector<SamplePath>& paths);

/// Concatenates the log-price column of every three-state path, in order.
std::vector<double> pool_price(const std::vector<SamplePath>& paths);

}  // namespace herdlab
