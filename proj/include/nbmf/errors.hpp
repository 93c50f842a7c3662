#pragma once

#include <stdexcept>
#include <string>

namespace nbmf {

/// Invalid or inconsistent configuration / construction arguments.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Inputs that are individually valid but do not fit together
/// (shape mismatches, sidecar/geometry disagreement, stale caches).
class DataMismatchError : public std::runtime_error {
public:
  explicit DataMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure at runtime (NaN gradients, diverging loss).
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nbmf
