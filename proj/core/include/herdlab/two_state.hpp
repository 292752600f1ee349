#pragma once

#include <cstdint>
#include <utility>

namespace herdlab {

/// Two-state herding model with externally controlled agents.
///
/// N ordinary agents switch between two states through idiosyncratic
/// transitions (sigma1, sigma2) and pairwise herding contacts (h).  On top of
/// those, m1 agents are pinned to state 1 and m2 to state 2; pinned agents
/// influence ordinary agents but never switch themselves.
struct TwoStateParams {
    std::int64_t n_agents = 1;   // N
    double sigma1 = 0.0;         // idiosyncratic rate towards state 1
    double sigma2 = 0.0;         // idiosyncratic rate towards state 2
    double herding = 1.0;        // h, rate per pair
    std::int64_t m1 = 0;         // controlled agents held in state 1
    std::int64_t m2 = 0;         // controlled agents held in state 2

    void validate() const;
};

/// Idiosyncratic rates with the controlled agents folded in, in units of the
/// herding rate: eps_i = (sigma_i + h*m_i) / h.  The symmetric case
/// eps1 == eps2 is the single-parameter family used for the stationary
/// analysis.
struct EffectiveRates {
    double eps1 = 1.0;
    double eps2 = 1.0;

    void validate() const;
};

/// Jump rates of the occupation count X of state 1, per unit time.
///
/// rate_up   = (N - X) * (sigma1 + h * (X + m1))
/// rate_down = X * (sigma2 + h * (N - X + m2))
///
/// Throws std::out_of_range if x_count is not in [0, N].
std::pair<double, double> transition_rates(const TwoStateParams& params,
                                           std::int64_t x_count);

/// Folds the controlled agents into shifted idiosyncratic preferences:
/// eps_i = (sigma_i + h * m_i) / h.
EffectiveRates fold_controlled(const TwoStateParams& params);

/// Drift and squared diffusion of the macroscopic fraction x = X/N:
///
///   dx = h * [eps1 (1-x) - eps2 x] dt + sqrt(2 h x (1-x)) dW
///
/// Returned as (drift, diffusion_sq); diffusion_sq vanishes exactly at the
/// boundaries x = 0 and x = 1.
std::pair<double, double> two_state_drift_diffusion(double x,
                                                    const EffectiveRates& rates,
                                                    double herding);

}  // namespace herdlab
