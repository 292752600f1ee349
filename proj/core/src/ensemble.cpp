#include "herdlab/ensemble.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "herdlab/errors.hpp"
#include "herdlab/rng.hpp"
#include "herdlab/simulate.hpp"

namespace herdlab {

namespace {

SamplePath run_one(const ModelRequest& request, const SimulationConfig& config) {
    return std::visit(
        [&](const auto& req) -> SamplePath {
            using T = std::decay_t<decltype(req)>;
            if constexpr (std::is_same_v<T, MicroRequest>) {
                return simulate_micro(req.params, config);
            } else if constexpr (std::is_same_v<T, TwoStateSdeRequest>) {
                return simulate_two_state_sde(req.rates, req.herding, config);
            } else {
                return simulate_three_state(req.params, req.intervention, config);
            }
        },
        request);
}

}  // namespace

unsigned ensemble_worker_count() {
    if (const char* env = std::getenv("HERDLAB_THREADS")) {
        const long value = std::strtol(env, nullptr, 10);
        if (value < 1) return 1;
        if (value > 512) return 512;
        return static_cast<unsigned>(value);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::vector<SamplePath> run_ensemble(const ModelRequest& request,
                                     const SimulationConfig& config) {
    config.validate();
    const std::uint32_t n = config.n_trajectories;
    std::vector<SamplePath> paths(n);
    std::vector<std::exception_ptr> failures(n);

    const unsigned workers = std::min<unsigned>(ensemble_worker_count(), n);
    std::atomic<std::uint32_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::uint32_t i = next.fetch_add(1);
            if (i >= n) break;
            SimulationConfig sub = config;
            sub.seed = derive_stream_seed(config.seed, i);
            try {
                paths[i] = run_one(request, sub);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }

    for (std::uint32_t i = 0; i < n; ++i) {
        if (!failures[i]) continue;
        const std::string prefix = "trajectory " + std::to_string(i) + ": ";
        try {
            std::rethrow_exception(failures[i]);
        } catch (const NumericalRegimeError& e) {
            throw NumericalRegimeError(prefix + e.what());
        } catch (const ConfigError& e) {
            throw ConfigError(prefix + e.what());
        } catch (const std::exception& e) {
            throw std::runtime_error(prefix + e.what());
        }
    }
    return paths;
}

std::vector<double> pool_primary(const std::vector<SamplePath>& paths) {
    std::vector<double> pooled;
    std::size_t total = 0;
    for (const auto& path : paths) total += path.primary.size();
    pooled.reserve(total);
    for (const auto& path : paths) {
        pooled.insert(pooled.end(), path.primary.begin(), path.primary.end());
    }
    return pooled;
}

std::vector<double> pool_price(const std::vector<SamplePath>& paths) {
    std::vector<double> pooled;
    std::size_t total = 0;
    for (const auto& path : paths) total += path.price.size();
    pooled.reserve(total);
    for (const auto& path : paths) {
        pooled.insert(pooled.end(), path.price.begin(), path.price.end());
    }
    return pooled;
}

}  // namespace herdlab
