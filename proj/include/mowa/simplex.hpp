#pragma once

#include <vector>

#include "mowa/common.hpp"

namespace mowa {

/// A point on the probability simplex: nonnegative components summing to one.
///
/// The constructor accepts vectors that are on the simplex up to small
/// rounding and renormalizes them, so the component sum is exact to 1e-12
/// afterwards. Arbitrary vectors go through project_to_simplex() instead.
class Weight {
 public:
  explicit Weight(Vec v);

  int dim() const { return static_cast<int>(v_.size()); }
  const Vec& values() const { return v_; }
  double operator[](Eigen::Index l) const { return v_(l); }

 private:
  Vec v_;
};

/// The weight vectors of a batch of scalarized sub-problems together with the
/// adaptation step counter.
struct WeightEnsemble {
  std::vector<Weight> weights;
  long step = 0;

  WeightEnsemble() = default;
  explicit WeightEnsemble(std::vector<Weight> w, long step_count = 0);

  int size() const { return static_cast<int>(weights.size()); }
  int dim() const { return weights.empty() ? 0 : weights.front().dim(); }
};

/// Euclidean projection onto the probability simplex.
/// Sort-and-threshold algorithm (Held/Wolfe/Crowder; see also Duchi et al.
/// 2008), O(m log m). Idempotent on points already on the simplex.
Weight project_to_simplex(const Vec& v);

/// Number of simplex lattice points with spacing 1/h: C(h + m - 1, m - 1).
long das_dennis_size(int m, int h);

/// All weights with components in {0, 1/h, ..., 1} summing to one, in
/// lexicographic order. Includes every vertex of the simplex.
std::vector<Weight> das_dennis_lattice(int m, int h);

/// n independent draws from the flat (Lebesgue-uniform) distribution on the
/// simplex, via sorted uniform spacings.
std::vector<Weight> sample_uniform_simplex(int m, int n, Rng& rng);

}  // namespace mowa
