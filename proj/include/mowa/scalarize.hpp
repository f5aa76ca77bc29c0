#pragma once

#include <limits>

#include "mowa/simplex.hpp"

namespace mowa {

class Problem;

/// Weighted l_p semi-norm about an ideal point. p = infinity selects the
/// Chebyshev form max_l w_l |f_l - ideal_l| (weights enter linearly).
struct Scalarizer {
  double p = std::numeric_limits<double>::infinity();
  Vec ideal;
};

inline Scalarizer chebyshev(Vec ideal) {
  return Scalarizer{std::numeric_limits<double>::infinity(), std::move(ideal)};
}

double scalarize(const Scalarizer& s, const Vec& fval, const Weight& w);

/// Component-wise objective lower bounds for the given problem, shifted down
/// by `utopian_offset` (both built-in families are nonnegative on the box, so
/// this is the constant vector -utopian_offset).
Vec default_ideal(const Problem& problem, double utopian_offset = 0.0);

}  // namespace mowa
