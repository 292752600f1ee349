#pragma once

#include <stdexcept>
#include <string>

namespace herdlab {

/// Invalid configuration or parameters; maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Simulation entered a regime outside numerical validity (step-size bound
/// violated, floor saturation); maps to CLI exit code 3.
class NumericalRegimeError : public std::runtime_error {
  public:
    explicit NumericalRegimeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace herdlab
