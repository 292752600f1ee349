#include "herdlab/two_state.hpp"

#include <stdexcept>
#include <string>

namespace herdlab {

void TwoStateParams::validate() const {
    if (n_agents < 1) {
        throw std::invalid_argument("two_state.n_agents: must be >= 1");
    }
    if (!(herding > 0.0)) {
        throw std::invalid_argument("two_state.herding: must be > 0");
    }
    if (sigma1 < 0.0 || sigma2 < 0.0) {
        throw std::invalid_argument("two_state.sigma1/sigma2: must be >= 0");
    }
    if (m1 < 0 || m2 < 0) {
        throw std::invalid_argument("two_state.m1/m2: must be >= 0");
    }
}

void EffectiveRates::validate() const {
    if (!(eps1 > 0.0) || !(eps2 > 0.0)) {
        throw std::invalid_argument("effective_rates.eps1/eps2: must be > 0");
    }
}

std::pair<double, double> transition_rates(const TwoStateParams& params,
                                           std::int64_t x_count) {
    params.validate();
    if (x_count < 0 || x_count > params.n_agents) {
        throw std::out_of_range("transition_rates: x_count " +
                                std::to_string(x_count) + " outside [0, " +
                                std::to_string(params.n_agents) + "]");
    }
    const auto n = static_cast<double>(params.n_agents);
    const auto x = static_cast<double>(x_count);
    // Grouped as (sigma_i + h*m_i) + h*occupancy so that folding the
    // controlled agents into sigma leaves the rates bit-identical.
    const double sigma1_eff = params.sigma1 + params.herding * static_cast<double>(params.m1);
    const double sigma2_eff = params.sigma2 + params.herding * static_cast<double>(params.m2);
    const double rate_up = (n - x) * (sigma1_eff + params.herding * x);
    const double rate_down = x * (sigma2_eff + params.herding * (n - x));
    return {rate_up, rate_down};
}

EffectiveRates fold_controlled(const TwoStateParams& params) {
    params.validate();
    const double h = params.herding;
    return {(params.sigma1 + h * static_cast<double>(params.m1)) / h,
            (params.sigma2 + h * static_cast<double>(params.m2)) / h};
}

std::pair<double, double> two_state_drift_diffusion(double x,
                                                    const EffectiveRates& rates,
                                                    double herding) {
    const double drift = herding * (rates.eps1 * (1.0 - x) - rates.eps2 * x);
    const double diffusion_sq = 2.0 * herding * x * (1.0 - x);
    return {drift, diffusion_sq};
}

}  // namespace herdlab
