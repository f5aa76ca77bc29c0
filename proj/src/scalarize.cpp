#include "mowa/scalarize.hpp"

#include <cmath>

#include "mowa/problems.hpp"

namespace mowa {

double scalarize(const Scalarizer& s, const Vec& fval, const Weight& w) {
  if (!(s.p >= 1.0)) {
    throw std::invalid_argument("Scalarizer: p must be >= 1");
  }
  if (!s.ideal.allFinite()) {
    throw std::invalid_argument("Scalarizer: ideal point must be finite");
  }
  if (fval.size() != s.ideal.size() || fval.size() != w.dim()) {
    throw std::invalid_argument("scalarize: dimension mismatch");
  }
  if (!fval.allFinite()) {
    throw std::invalid_argument("scalarize: non-finite objective value");
  }

  if (std::isinf(s.p)) {
    double best = 0.0;
    for (Eigen::Index l = 0; l < fval.size(); ++l) {
      best = std::max(best, w[l] * std::abs(fval(l) - s.ideal(l)));
    }
    return best;
  }

  double acc = 0.0;
  for (Eigen::Index l = 0; l < fval.size(); ++l) {
    acc += w[l] * std::pow(std::abs(fval(l) - s.ideal(l)), s.p);
  }
  return std::pow(acc, 1.0 / s.p);
}

Vec default_ideal(const Problem& problem, double utopian_offset) {
  if (!(utopian_offset >= 0.0)) {
    throw std::invalid_argument("default_ideal: utopian offset must be >= 0");
  }
  return problem.objective_lower_bounds().array() - utopian_offset;
}

}  // namespace mowa
