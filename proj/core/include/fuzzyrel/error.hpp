#pragma once

#include <stdexcept>
#include <string>

namespace fuzzyrel {

/// Bad arguments or options: wrong flag values, out-of-range parameters,
/// requests that make no sense for the chosen mode. Maps to CLI exit code 2.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed, empty or degenerate input data. Maps to CLI exit code 3.
class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fuzzyrel
