#pragma once

#include <vector>

#include "mowa/common.hpp"

namespace mowa {

/// Radially symmetric short-range repulsive interaction kernel.
///
/// Morse: U(z) = exp(-C |z|), C > 0.
/// Riesz: U(z) = |z|^(-s), s > 0 (singular at z = 0).
///
/// The radial derivative is extended by the convention DU(0) = 0, which also
/// makes the gradient vanish at the origin.
class Potential {
 public:
  enum class Kind { kMorse, kRiesz };

  static Potential morse(double c);
  static Potential riesz(double s);

  Kind kind() const { return kind_; }
  double param() const { return param_; }

  /// Kernel value at separation distance r >= 0.
  double value_at_distance(double r) const;

  /// U(z). Throws std::domain_error for the Riesz kernel at z = 0.
  double value(const Vec& z) const;

  /// Derivative of the radial profile, with the value 0 at r = 0.
  double radial_derivative(double r) const;

  /// Gradient with respect to z; the zero vector at z = 0.
  Vec gradient(const Vec& z) const;

 private:
  Potential(Kind kind, double param);

  Kind kind_;
  double param_;
};

/// Mean pairwise interaction energy of a point configuration,
/// (1/N^2) sum_{i != j} U(p_i - p_j). Diagonal terms are excluded: they are a
/// configuration-independent constant for Morse and infinite for Riesz.
/// Returns 0 for a single point. Summation order is fixed for determinism.
double ensemble_energy(const Potential& u, const std::vector<Vec>& points);

}  // namespace mowa
