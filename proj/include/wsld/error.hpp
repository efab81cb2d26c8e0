#pragma once

#include <stdexcept>
#include <string>

namespace wsld {

/// Malformed problem configuration (bad JSON, unknown expression id, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Linear solve or eigen-decomposition failed.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Time stepping exceeded the blow-up threshold.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(std::size_t step, double norm)
      : std::runtime_error("instability detected at step " + std::to_string(step) +
                           " (sup norm " + std::to_string(norm) + ")"),
        step_(step),
        norm_(norm) {}

  std::size_t step() const noexcept { return step_; }
  double norm() const noexcept { return norm_; }

 private:
  std::size_t step_;
  double norm_;
};

}  // namespace wsld
