#include "mowa/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace mowa {

Potential::Potential(Kind kind, double param) : kind_(kind), param_(param) {
  if (!(param > 0.0) || !std::isfinite(param)) {
    throw std::invalid_argument("Potential: parameter must be strictly positive");
  }
}

Potential Potential::morse(double c) { return Potential(Kind::kMorse, c); }

Potential Potential::riesz(double s) { return Potential(Kind::kRiesz, s); }

double Potential::value_at_distance(double r) const {
  if (!(r >= 0.0)) {
    throw std::invalid_argument("Potential::value_at_distance: r must be >= 0");
  }
  if (kind_ == Kind::kMorse) {
    return std::exp(-param_ * r);
  }
  if (r == 0.0) {
    throw std::domain_error("Riesz potential is singular at zero separation");
  }
  return std::pow(r, -param_);
}

double Potential::value(const Vec& z) const {
  if (!z.allFinite()) {
    throw std::invalid_argument("Potential::value: non-finite separation");
  }
  return value_at_distance(z.norm());
}

double Potential::radial_derivative(double r) const {
  if (!(r >= 0.0)) {
    throw std::invalid_argument("Potential::radial_derivative: r must be >= 0");
  }
  if (r == 0.0) {
    return 0.0;
  }
  if (kind_ == Kind::kMorse) {
    return -param_ * std::exp(-param_ * r);
  }
  return -param_ * std::pow(r, -param_ - 1.0);
}

Vec Potential::gradient(const Vec& z) const {
  if (!z.allFinite()) {
    throw std::invalid_argument("Potential::gradient: non-finite separation");
  }
  const double r = z.norm();
  if (r == 0.0) {
    return Vec::Zero(z.size());
  }
  return (radial_derivative(r) / r) * z;
}

double ensemble_energy(const Potential& u, const std::vector<Vec>& points) {
  if (points.empty()) {
    throw std::invalid_argument("ensemble_energy: empty point set");
  }
  const std::size_t n = points.size();
  const Eigen::Index dim = points.front().size();
  for (const Vec& p : points) {
    if (p.size() != dim) {
      throw std::invalid_argument("ensemble_energy: mixed dimensions");
    }
  }
  if (n == 1) {
    return 0.0;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      acc += u.value(points[i] - points[j]);
    }
  }
  return 2.0 * acc / (static_cast<double>(n) * static_cast<double>(n));
}

}  // namespace mowa
