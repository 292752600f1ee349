#include "herdlab/sweep.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "herdlab/ensemble.hpp"
#include "herdlab/errors.hpp"
#include "herdlab/rng.hpp"
#include "herdlab/stats.hpp"

namespace herdlab {

std::uint64_t sweep_row_seed(std::uint64_t seed, double m) {
    // Key the row on the integer-scaled m so fractional levels stay distinct.
    const auto key = static_cast<std::uint64_t>(std::llround(m * 1024.0));
    return derive_stream_seed(seed ^ 0x53574545ULL, key);
}

SweepRow run_sweep_row(const ThreeStateParams& base, InterventionKind strategy,
                       double m, const SimulationConfig& config,
                       std::span<const double> thresholds,
                       std::vector<double>* pooled_price) {
    SimulationConfig row_config = config;
    row_config.seed = sweep_row_seed(config.seed, m);

    ThreeStateRequest request;
    request.params = base;
    request.intervention = InterventionSpec{strategy, m};
    const auto paths = run_ensemble(request, row_config);

    auto pooled = pool_price(paths);
    SweepRow row;
    row.m = m;
    row.strategy = strategy;
    row.n_samples = pooled.size();
    row.std_p = moments(pooled).second;
    row.exceedance = exceedance(pooled, thresholds);
    row.trajectory_std.reserve(paths.size());
    for (const auto& path : paths) {
        row.trajectory_std.push_back(moments(path.price).second);
    }
    if (pooled_price != nullptr) {
        *pooled_price = std::move(pooled);
    }
    return row;
}

std::vector<SweepRow> intervention_sweep(const ThreeStateParams& base,
                                         InterventionKind strategy,
                                         std::span<const double> m_values,
                                         const SimulationConfig& config,
                                         std::span<const double> thresholds) {
    base.validate();
    config.validate();
    std::vector<SweepRow> rows;
    rows.reserve(m_values.size());
    for (const double m : m_values) {
        try {
            rows.push_back(run_sweep_row(base, strategy, m, config, thresholds));
        } catch (const NumericalRegimeError& e) {
            throw NumericalRegimeError("sweep row m=" + std::to_string(m) + ": " + e.what());
        } catch (const std::exception& e) {
            throw std::runtime_error("sweep row m=" + std::to_string(m) + ": " + e.what());
        }
    }
    return rows;
}

std::vector<double> default_thresholds() {
    return {1.0, 2.0, 4.0};
}

}  // namespace herdlab
