#pragma once

#include <stdexcept>
#include <string>

namespace adiabat {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration, model file, or CLI input.
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Semantic violation of a model contract: unknown space, dimension
/// mismatch, out-of-bounds state, query the model cannot decide.
struct ModelError : Error {
  explicit ModelError(const std::string& what) : Error(what) {}
};

/// Numerical failure: non-monotone predicate, singular integrand,
/// non-convergent simulation.
struct NumericsError : Error {
  explicit NumericsError(const std::string& what) : Error(what) {}
};

}  // namespace adiabat
