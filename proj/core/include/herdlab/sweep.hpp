#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "herdlab/config.hpp"
#include "herdlab/three_state.hpp"

namespace herdlab {

/// One intervention level of a sweep: summary statistics of the pooled
/// log-price samples across the row's ensemble.
struct SweepRow {
    double m = 0.0;
    InterventionKind strategy = InterventionKind::none;
    double std_p = 0.0;
    std::vector<std::pair<double, double>> exceedance;  // threshold -> P(|p| > threshold)
    std::uint64_t n_samples = 0;
    // Per-trajectory std of p; basis for pooled standard errors.
    std::vector<double> trajectory_std;
};

/// Deterministic sub-seed for the m-row of a sweep seeded with `seed`.
std::uint64_t sweep_row_seed(std::uint64_t seed, double m);

/// A single sweep row: fresh ensemble at intervention level m, pooled |p|
/// statistics.  `pooled_price` receives the pooled log-price samples when
/// non-null (used by the CLI to write per-row PDF tables).
SweepRow run_sweep_row(const ThreeStateParams& base, InterventionKind strategy,
                       double m, const SimulationConfig& config,
                       std::span<const double> thresholds,
                       std::vector<double>* pooled_price = nullptr);

/// Fig-ladder sweep: one row per m, ordered as given.  Row failures carry
/// their m in the error message and abort the sweep.
std::vector<SweepRow> intervention_sweep(const ThreeStateParams& base,
                                         InterventionKind strategy,
                                         std::span<const double> m_values,
                                         const SimulationConfig& config,
                                         std::span<const double> thresholds);

/// Default exceedance thresholds in |p| units.
std::vector<double> default_thresholds();

}  // namespace herdlab
