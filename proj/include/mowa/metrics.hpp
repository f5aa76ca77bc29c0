#pragma once

#include <vector>

#include "mowa/potential.hpp"

namespace mowa {

/// Inverted generational distance: mean over the reference set of the
/// Euclidean distance to the nearest solution point. Lower is better; zero
/// iff every reference point coincides with some solution.
double igd(const std::vector<Vec>& reference, const std::vector<Vec>& solutions);

/// Potential-energy diversity of a computed front (diagonal excluded).
double front_energy(const Potential& u, const std::vector<Vec>& solutions);

/// Metric values recorded at each adaptation step.
struct MetricSeries {
  std::vector<long> k;
  std::vector<double> energy;
  std::vector<double> igd;
};

/// Median of a sample (mean of the two middle elements for even sizes).
double median(std::vector<double> values);

}  // namespace mowa
