#include "mowa/metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mowa {

double igd(const std::vector<Vec>& reference, const std::vector<Vec>& solutions) {
  if (reference.empty() || solutions.empty()) {
    throw std::invalid_argument("igd: reference and solution sets must be non-empty");
  }
  const Eigen::Index dim = reference.front().size();
  for (const Vec& s : solutions) {
    if (s.size() != dim) {
      throw std::invalid_argument("igd: dimension mismatch");
    }
  }
  double acc = 0.0;
  for (const Vec& r : reference) {
    if (r.size() != dim) {
      throw std::invalid_argument("igd: dimension mismatch");
    }
    double nearest = std::numeric_limits<double>::infinity();
    for (const Vec& s : solutions) {
      nearest = std::min(nearest, (r - s).norm());
    }
    acc += nearest;
  }
  return acc / static_cast<double>(reference.size());
}

double front_energy(const Potential& u, const std::vector<Vec>& solutions) {
  return ensemble_energy(u, solutions);
}

double median(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("median: empty sample");
  }
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) {
    return values[n / 2];
  }
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace mowa
