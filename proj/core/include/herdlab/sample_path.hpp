#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace herdlab {

enum class ModelTag { two_state_micro, two_state_sde, three_state_sde };

std::string_view to_string(ModelTag tag);

/// One stochastic realization sampled on a uniform time grid.
///
/// `primary` holds the occupation count X for the microscopic chain, the
/// fraction x for the two-state diffusion, and x_f for the market model; for
/// the market model `mood` and `price` carry xi and p in parallel.
struct SamplePath {
    ModelTag model_tag = ModelTag::two_state_micro;
    std::uint64_t seed = 0;  // stream seed that generated this path
    std::vector<double> times;
    std::vector<double> primary;
    std::vector<double> mood;
    std::vector<double> price;

    // Diagnostics (three-state): steps taken and x_f floor clamps.
    std::uint64_t steps = 0;
    std::uint64_t floor_hits = 0;

    std::size_t size() const { return times.size(); }

    /// Verifies the structural invariants (strictly increasing times,
    /// parallel columns); throws std::logic_error on violation.
    void check_invariants() const;
};

}  // namespace herdlab
