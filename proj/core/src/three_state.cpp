#include "herdlab/three_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace herdlab {

void ThreeStateParams::validate() const {
    if (!(eps_cf > 0.0)) throw std::invalid_argument("three_state.eps_cf: must be > 0");
    if (!(eps_fc > 0.0)) throw std::invalid_argument("three_state.eps_fc: must be > 0");
    if (!(eps_cc > 0.0)) throw std::invalid_argument("three_state.eps_cc: must be > 0");
    if (!(big_h > 0.0)) throw std::invalid_argument("three_state.big_h: must be > 0");
    if (a < 0.0) throw std::invalid_argument("three_state.a: must be >= 0");
    if (!(alpha > 0.0)) throw std::invalid_argument("three_state.alpha: must be > 0");
    if (!(r0 > 0.0)) throw std::invalid_argument("three_state.r0: must be > 0");
}

ThreeStateParams paper_baseline() {
    return ThreeStateParams{0.1, 3.0, 3.0, 300.0, 0.5, 2.0, 1.0};
}

void InterventionSpec::validate() const {
    if (m < 0.0) throw std::invalid_argument("intervention.m: must be >= 0");
}

std::string_view to_string(InterventionKind kind) {
    switch (kind) {
        case InterventionKind::none: return "none";
        case InterventionKind::fundamentalist: return "fundamentalist";
        case InterventionKind::stochastic: return "stochastic";
    }
    return "none";
}

InterventionKind intervention_kind_from_string(std::string_view name) {
    if (name == "none") return InterventionKind::none;
    if (name == "fundamentalist") return InterventionKind::fundamentalist;
    if (name == "stochastic") return InterventionKind::stochastic;
    throw std::invalid_argument("intervention.kind: unknown strategy '" +
                                std::string(name) + "'");
}

double log_price(double x_f, double xi, double r0) {
    if (!(x_f > 0.0) || !(x_f < 1.0)) {
        throw std::domain_error("log_price: x_f must lie in (0, 1)");
    }
    if (std::fabs(xi) > 1.0) {
        throw std::domain_error("log_price: |xi| must be <= 1");
    }
    return r0 * ((1.0 - x_f) / x_f) * xi;
}

std::pair<double, double> excess_demands(double x_f, double xi, double p, double r0) {
    if (!(x_f > 0.0) || !(x_f < 1.0)) {
        throw std::domain_error("excess_demands: x_f must lie in (0, 1)");
    }
    return {-x_f * p, r0 * (1.0 - x_f) * xi};
}

double inter_event_time_at_price(double p, const ThreeStateParams& params) {
    const double base = 1.0 + params.a * std::fabs(p);
    if (params.alpha == 2.0) {
        return 1.0 / (base * base);  // common case, avoids pow
    }
    return std::pow(base, -params.alpha);
}

double inter_event_time(double x_f, double xi, const ThreeStateParams& params) {
    return inter_event_time_at_price(log_price(x_f, xi, params.r0), params);
}

ThreeStateDrift three_state_drift_diffusion(const MarketState& state,
                                            const ThreeStateParams& params) {
    const double inv_tau = 1.0 / inter_event_time(state.x_f, state.xi, params);
    ThreeStateDrift d;
    d.drift_xf = ((1.0 - state.x_f) * params.eps_cf - state.x_f * params.eps_fc) * inv_tau;
    d.diffsq_xf = 2.0 * state.x_f * (1.0 - state.x_f) * inv_tau;
    d.drift_xi = -2.0 * params.big_h * params.eps_cc * state.xi * inv_tau;
    d.diffsq_xi = 2.0 * params.big_h * (1.0 - state.xi * state.xi) * inv_tau;
    return d;
}

ThreeStateParams apply_intervention(const ThreeStateParams& params,
                                    const InterventionSpec& spec) {
    params.validate();
    spec.validate();
    ThreeStateParams out = params;
    if (spec.m == 0.0) return out;
    switch (spec.kind) {
        case InterventionKind::none:
            break;
        case InterventionKind::fundamentalist:
            out.eps_cf += spec.m;
            break;
        case InterventionKind::stochastic:
            out.eps_cf += spec.m / 2.0;
            out.eps_fc += spec.m / 2.0;
            out.eps_cc += spec.m / 2.0;
            break;
    }
    return out;
}

}  // namespace herdlab
