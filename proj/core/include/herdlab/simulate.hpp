#pragma once

#include "herdlab/config.hpp"
#include "herdlab/sample_path.hpp"
#include "herdlab/three_state.hpp"
#include "herdlab/two_state.hpp"

namespace herdlab {

/// Statistically exact event-driven simulation of the microscopic two-state
/// chain (competing exponential clocks; no time-discretization error).
/// States are recorded on the uniform grid burn_in + k*sample_interval.
/// Identical (params, config) produce bit-identical paths.
SamplePath simulate_micro(const TwoStateParams& params, const SimulationConfig& config);

/// Euler-Maruyama integration of the macroscopic two-state diffusion
///
///   dx = h [eps1 (1-x) - eps2 x] dt + sqrt(2 h x (1-x)) dW
///
/// with reflecting boundary correction on [0, 1].  Rejects configurations
/// with herding * base_step > 0.01.
SamplePath simulate_two_state_sde(const EffectiveRates& rates, double herding,
                                  const SimulationConfig& config);

/// Coupled Euler-Maruyama integration of the market model.  The intervention
/// is folded into the rates first, so pre-folding with apply_intervention and
/// passing kind == none is equivalent.
///
/// The inter-event time enters as a state-dependent effective step: each
/// update advances model time by base_step * tau(x_f, xi) while the
/// integrator applies the 1/tau-scaled drift and squared diffusion over that
/// step, which cancels to a fixed-step update of the unit-clock dynamics.
/// Samples land on the uniform model-time grid either way.  x_f is clamped
/// to [x_floor, 1 - x_floor] for price and tau evaluation; clamped steps are
/// counted and the run fails with NumericalRegimeError when their fraction
/// exceeds max_floor_fraction.
SamplePath simulate_three_state(const ThreeStateParams& params,
                                const InterventionSpec& intervention,
                                const SimulationConfig& config);

}  // namespace herdlab
