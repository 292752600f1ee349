#pragma once

#include <cstdint>
#include <string_view>
#include <tuple>
#include <utility>

namespace herdlab {

/// Three-state market model in scaled time t_s = h*t.  Agents are either
/// fundamentalists or chartists; chartists hold an optimist or pessimist
/// stance.  All idiosyncratic rates are expressed relative to the
/// fundamentalist-chartist herding rate h; big_h is the relative intensity of
/// the chartist-chartist herding.
struct ThreeStateParams {
    double eps_cf = 0.1;  // chartist -> fundamentalist, sigma_cf / h
    double eps_fc = 3.0;  // fundamentalist -> chartist, sigma_fc / h
    double eps_cc = 3.0;  // optimist <-> pessimist, sigma_cc / (H h)
    double big_h = 300.0; // H
    double a = 0.5;       // feedback amplitude of the inter-event time
    double alpha = 2.0;   // feedback exponent
    double r0 = 1.0;      // relative chartist impact

    void validate() const;
};

/// Parameter set of Figs. matching the reference market regime.
ThreeStateParams paper_baseline();

/// Instantaneous macroscopic market state.
struct MarketState {
    double x_f = 0.5;  // fundamentalist fraction, in (0, 1)
    double xi = 0.0;   // average chartist mood, in [-1, 1]
    double p = 0.0;    // log-price relative to fundamental value
};

enum class InterventionKind { none, fundamentalist, stochastic };

/// Controlled-agent intervention: m agents with predefined behavior.
struct InterventionSpec {
    InterventionKind kind = InterventionKind::none;
    double m = 0.0;  // number of controlled agents, m >= 0

    void validate() const;
};

std::string_view to_string(InterventionKind kind);
InterventionKind intervention_kind_from_string(std::string_view name);

/// Walrasian log-price p = ln(P/P_f) = r0 * ((1 - x_f)/x_f) * xi.
/// Throws std::domain_error unless 0 < x_f < 1 and |xi| <= 1.
double log_price(double x_f, double xi, double r0);

/// Normalized excess demands (per-agent fractions):
///   d_f = -x_f * p            (fundamentalists push price to fundamentals)
///   d_c = r0 * (1 - x_f) * xi (chartists trade on mood)
/// At the Walrasian price the two cancel.
std::pair<double, double> excess_demands(double x_f, double xi, double p, double r0);

/// State-dependent mean inter-event time:
///   tau = (1 + a |p|)^(-alpha),  p evaluated from (x_f, xi, r0).
/// tau <= 1 always; tau == 1 iff the feedback is off (a == 0) or p == 0.
double inter_event_time(double x_f, double xi, const ThreeStateParams& params);

/// Same, with the log-price already known.
double inter_event_time_at_price(double p, const ThreeStateParams& params);

struct ThreeStateDrift {
    double drift_xf = 0.0;
    double diffsq_xf = 0.0;
    double drift_xi = 0.0;
    double diffsq_xi = 0.0;
};

/// Drift and squared diffusion of the coupled (x_f, xi) dynamics in scaled
/// time, feedback included:
///
///   dx_f = [(1-x_f) eps_cf - x_f eps_fc] / tau dt + sqrt(2 x_f (1-x_f)/tau) dW_f
///   dxi  = -2 H eps_cc xi / tau dt + sqrt(2 H (1-xi^2)/tau) dW_xi
///
/// The two equations couple only through tau(x_f, xi).
ThreeStateDrift three_state_drift_diffusion(const MarketState& state,
                                            const ThreeStateParams& params);

/// Folds an intervention into the scaled rates:
///   fundamentalist: eps_cf += m
///   stochastic:     eps_cf += m/2, eps_fc += m/2, eps_cc += m/2
///   none:           identity (as is m == 0 for any kind)
ThreeStateParams apply_intervention(const ThreeStateParams& params,
                                    const InterventionSpec& spec);

}  // namespace herdlab
