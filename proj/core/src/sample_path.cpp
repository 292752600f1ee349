#include "herdlab/sample_path.hpp"

#include <stdexcept>

namespace herdlab {

std::string_view to_string(ModelTag tag) {
    switch (tag) {
        case ModelTag::two_state_micro: return "two_state_micro";
        case ModelTag::two_state_sde: return "two_state_sde";
        case ModelTag::three_state_sde: return "three_state_sde";
    }
    return "two_state_micro";
}

void SamplePath::check_invariants() const {
    if (primary.size() != times.size()) {
        throw std::logic_error("SamplePath: primary/times length mismatch");
    }
    const bool three_state = model_tag == ModelTag::three_state_sde;
    if (three_state && (mood.size() != times.size() || price.size() != times.size())) {
        throw std::logic_error("SamplePath: mood/price column length mismatch");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) {
            throw std::logic_error("SamplePath: times not strictly increasing");
        }
    }
}

}  // namespace herdlab
