#pragma once

#include <stdexcept>
#include <string>

namespace gaugeflow {

/// Two fields on different grids were combined.
struct conformability_error : std::invalid_argument {
    explicit conformability_error(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A configuration value violates its contract.
struct config_error : std::invalid_argument {
    explicit config_error(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A numeric input left the valid domain (non-finite field, x outside [0,1], ...).
struct numeric_error : std::domain_error {
    explicit numeric_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace gaugeflow
