#pragma once

#include <random>
#include <stdexcept>

#include <Eigen/Core>

namespace mowa {

using Vec = Eigen::VectorXd;
using Rng = std::mt19937_64;

/// Thrown when a running experiment must stop (non-finite objective values,
/// inconsistent solver state). Carries a diagnostic message.
struct RunAbortError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown for configuration problems; the message names the offending field.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace mowa
