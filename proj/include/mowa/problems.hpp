#pragma once

#include <string>
#include <vector>

#include "mowa/common.hpp"

namespace mowa {

/// A built-in benchmark problem with box domain [0,1]^d, d = m, nonnegative
/// objectives, and an analytic description of its Pareto front.
///
/// Lame family (m in {2,3}): decision variables x_1..x_{m-1} are angles on
/// the positive orthant of the unit sphere (theta_j = pi/2 * x_j) and x_m is
/// the distance variable g. Objectives are f_l = (1+g) s_l^(2/gamma), so the
/// front (g = 0) satisfies sum_l f_l^gamma = 1; gamma < 1 gives a strongly
/// convex front, gamma = 2 the concave sphere octant.
///
/// Inverted DTLZ1 (m = 3): one Rastrigin-like distance variable x_3; the
/// front is the triangle {f >= 0, sum f_l = 1, f_l <= 0.5}.
class Problem {
 public:
  enum class Family { kLame, kInvertedDtlz1 };

  static Problem lame(int num_objectives, double gamma);
  static Problem inverted_dtlz1();

  /// Parses ids of the form "lame{m}_g{gamma}" or "idtlz1_3".
  static Problem from_id(const std::string& id);

  const std::string& id() const { return id_; }
  Family family() const { return family_; }
  int num_objectives() const { return num_objectives_; }
  int dim() const { return num_objectives_; }  // d = m
  double gamma() const;                        // Lame only

  /// Objective vector at x in [0,1]^d. Always finite and nonnegative.
  Vec evaluate(const Vec& x) const;

  /// Component-wise lower bounds of the objectives over the box (zeros).
  Vec objective_lower_bounds() const;

  /// Distance-like measure that vanishes exactly on the analytic front:
  /// |sum y^gamma - 1| for Lame, |sum y - 1| + sum max(0, y - 0.5) for
  /// inverted DTLZ1.
  double front_residual(const Vec& y) const;

  /// Approximately area-uniform sample of the analytic front. Lame fronts are
  /// sampled by uniform angles thinned against the surface measure (supported
  /// for gamma <= 2, which covers the built-in instances); the inverted DTLZ1
  /// front by flat simplex sampling thinned to the capped triangle.
  std::vector<Vec> sample_front(int count, Rng& rng) const;

  /// Deterministic parametric sweep along the m = 2 front, for plotting.
  std::vector<Vec> front_sweep(int count) const;

  /// Inverse of the front parametrization: a decision point with the distance
  /// variable at its optimum whose image is y (y must lie on the front).
  Vec decision_from_front(const Vec& y) const;

 private:
  Problem(Family family, int num_objectives, double gamma, std::string id);

  Family family_;
  int num_objectives_;
  double gamma_ = 0.0;
  std::string id_;
};

}  // namespace mowa
