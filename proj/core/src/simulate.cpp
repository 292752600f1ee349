#include "herdlab/simulate.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "herdlab/errors.hpp"
#include "herdlab/rng.hpp"

namespace herdlab {

namespace {

// Uniform sample grid: points burn_in + k*sample_interval, k = 1..n.
class SampleGrid {
  public:
    explicit SampleGrid(const SimulationConfig& config)
        : burn_in_(config.burn_in),
          interval_(config.sample_interval),
          target_(config.samples_per_trajectory()) {}

    std::uint64_t target() const { return target_; }
    bool done() const { return emitted_ == target_; }

    /// Time of the next grid point to emit.
    double next_time() const {
        return burn_in_ + static_cast<double>(emitted_ + 1) * interval_;
    }

    void mark_emitted() { ++emitted_; }

  private:
    double burn_in_;
    double interval_;
    std::uint64_t target_;
    std::uint64_t emitted_ = 0;
};

void reflect_unit_interval(double& x) {
    while (x < 0.0 || x > 1.0) {
        if (x < 0.0) x = -x;
        if (x > 1.0) x = 2.0 - x;
    }
}

void reflect_symmetric_unit(double& xi) {
    while (xi < -1.0 || xi > 1.0) {
        if (xi < -1.0) xi = -2.0 - xi;
        if (xi > 1.0) xi = 2.0 - xi;
    }
}

constexpr std::uint64_t kStallGuardSteps = 1'000'000'000ULL;

}  // namespace

SamplePath simulate_micro(const TwoStateParams& params, const SimulationConfig& config) {
    params.validate();
    config.validate();

    const std::int64_t n = params.n_agents;
    std::vector<double> rate_up(static_cast<std::size_t>(n) + 1);
    std::vector<double> rate_down(static_cast<std::size_t>(n) + 1);
    for (std::int64_t x = 0; x <= n; ++x) {
        const auto [up, down] = transition_rates(params, x);
        rate_up[static_cast<std::size_t>(x)] = up;
        rate_down[static_cast<std::size_t>(x)] = down;
    }

    const EffectiveRates eff = fold_controlled(params);
    std::int64_t x = static_cast<std::int64_t>(
        std::llround(static_cast<double>(n) * eff.eps1 / (eff.eps1 + eff.eps2)));
    if (x < 0) x = 0;
    if (x > n) x = n;

    Rng rng(config.seed);
    SampleGrid grid(config);

    SamplePath path;
    path.model_tag = ModelTag::two_state_micro;
    path.seed = config.seed;
    path.times.reserve(grid.target());
    path.primary.reserve(grid.target());

    double t = 0.0;
    while (!grid.done()) {
        const auto xi = static_cast<std::size_t>(x);
        const double total = rate_up[xi] + rate_down[xi];
        if (total <= 0.0) {
            // Frozen chain (pure herding at an absorbing boundary): the state
            // holds forever, so the remaining grid points all record it.
            while (!grid.done()) {
                path.times.push_back(grid.next_time());
                path.primary.push_back(static_cast<double>(x));
                grid.mark_emitted();
            }
            break;
        }
        const double t_next = t + rng.exponential(total);
        while (!grid.done() && grid.next_time() <= t_next) {
            path.times.push_back(grid.next_time());
            path.primary.push_back(static_cast<double>(x));
            grid.mark_emitted();
        }
        x += (rng.uniform() * total < rate_up[xi]) ? 1 : -1;
        ++path.steps;
        t = t_next;
    }
    return path;
}

SamplePath simulate_two_state_sde(const EffectiveRates& rates, double herding,
                                  const SimulationConfig& config) {
    rates.validate();
    config.validate();
    if (!(herding > 0.0)) {
        throw ConfigError("two_state_sde.herding: must be > 0");
    }
    const double dt = config.base_step;
    if (herding * dt > 0.01) {
        throw NumericalRegimeError(
            "two_state_sde: herding * base_step = " + std::to_string(herding * dt) +
            " exceeds the stability bound 0.01; reduce sim.base_step");
    }

    Rng rng(config.seed);
    SampleGrid grid(config);

    SamplePath path;
    path.model_tag = ModelTag::two_state_sde;
    path.seed = config.seed;
    path.times.reserve(grid.target());
    path.primary.reserve(grid.target());

    double x = rates.eps1 / (rates.eps1 + rates.eps2);
    const double sqrt_dt = std::sqrt(dt);
    std::uint64_t step = 0;
    while (!grid.done()) {
        const double t_new = static_cast<double>(step + 1) * dt;
        while (!grid.done() && grid.next_time() <= t_new) {
            path.times.push_back(grid.next_time());
            path.primary.push_back(x);
            grid.mark_emitted();
        }
        const double drift = herding * (rates.eps1 * (1.0 - x) - rates.eps2 * x);
        const double diffsq = 2.0 * herding * x * (1.0 - x);
        x += drift * dt + std::sqrt(diffsq) * sqrt_dt * rng.normal();
        if (config.reflect_boundaries) {
            reflect_unit_interval(x);
        } else {
            x = std::min(std::max(x, config.x_floor), 1.0 - config.x_floor);
        }
        ++step;
    }
    path.steps = step;
    return path;
}

SamplePath simulate_three_state(const ThreeStateParams& params,
                                const InterventionSpec& intervention,
                                const SimulationConfig& config) {
    config.validate();
    const ThreeStateParams eff = apply_intervention(params, intervention);

    Rng rng(config.seed);
    SampleGrid grid(config);

    SamplePath path;
    path.model_tag = ModelTag::three_state_sde;
    path.seed = config.seed;
    path.times.reserve(grid.target());
    path.primary.reserve(grid.target());
    path.mood.reserve(grid.target());
    path.price.reserve(grid.target());

    const double dt = config.base_step;  // unit-clock step, pre-tau
    const double sqrt_dt = std::sqrt(dt);
    const double lo = config.x_floor;
    const double hi = 1.0 - config.x_floor;

    double x = eff.eps_cf / (eff.eps_cf + eff.eps_fc);
    double xi = 0.0;
    double t = 0.0;
    std::uint64_t steps = 0;
    std::uint64_t floor_hits = 0;
    std::uint64_t stall = 0;

    while (!grid.done()) {
        double xe = x;
        if (xe < lo || xe > hi) {
            ++floor_hits;
            xe = std::min(std::max(xe, lo), hi);
        }
        const double p = eff.r0 * ((1.0 - xe) / xe) * xi;
        const double tau = inter_event_time_at_price(p, eff);
        const double t_new = t + dt * tau;

        // sample_interval >= base_step and tau <= 1 imply at most one grid
        // point per step, but stay safe against exact-boundary ties.
        if (grid.next_time() <= t_new) {
            while (!grid.done() && grid.next_time() <= t_new) {
                path.times.push_back(grid.next_time());
                path.primary.push_back(xe);
                path.mood.push_back(xi);
                path.price.push_back(p);
                grid.mark_emitted();
            }
            stall = 0;
        } else if (++stall > kStallGuardSteps) {
            throw NumericalRegimeError(
                "three_state: model clock stalled (tau ~ 0 for " +
                std::to_string(kStallGuardSteps) + " consecutive steps)");
        }

        const double drift_xf = (1.0 - x) * eff.eps_cf - x * eff.eps_fc;
        const double diffsq_xf = 2.0 * x * (1.0 - x);
        const double drift_xi = -2.0 * eff.big_h * eff.eps_cc * xi;
        const double diffsq_xi = 2.0 * eff.big_h * (1.0 - xi * xi);
        x += drift_xf * dt + std::sqrt(diffsq_xf) * sqrt_dt * rng.normal();
        xi += drift_xi * dt + std::sqrt(diffsq_xi) * sqrt_dt * rng.normal();
        if (config.reflect_boundaries) {
            reflect_unit_interval(x);
            reflect_symmetric_unit(xi);
        } else {
            x = std::min(std::max(x, lo), hi);
            xi = std::min(std::max(xi, -1.0), 1.0);
        }
        t = t_new;
        ++steps;

        if ((steps & 0xFFFFF) == 0 && steps > 1'000'000 &&
            static_cast<double>(floor_hits) >
                config.max_floor_fraction * static_cast<double>(steps)) {
            break;  // regime check below reports the violation
        }
    }

    path.steps = steps;
    path.floor_hits = floor_hits;
    if (steps > 0 && static_cast<double>(floor_hits) >
                         config.max_floor_fraction * static_cast<double>(steps)) {
        throw NumericalRegimeError(
            "three_state: x_f hit the floor on " + std::to_string(floor_hits) + " of " +
            std::to_string(steps) + " steps (max_floor_fraction " +
            std::to_string(config.max_floor_fraction) + "); regime outside validity");
    }
    return path;
}

}  // namespace herdlab
