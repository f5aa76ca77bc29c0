#include <cmath>

#include "doctest.h"
#include "mowa/problems.hpp"
#include "mowa/scalarize.hpp"

using mowa::Problem;
using mowa::Scalarizer;
using mowa::Vec;
using mowa::Weight;

namespace {

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("scalarize worked examples") {
  const Weight half(vec2(0.5, 0.5));

  const Scalarizer cheb = mowa::chebyshev(Vec::Zero(2));
  CHECK(mowa::scalarize(cheb, vec2(1.0, 2.0), half) == doctest::Approx(1.0));

  const Scalarizer sum{1.0, Vec::Zero(2)};
  CHECK(mowa::scalarize(sum, vec2(1.0, 2.0), Weight(vec2(0.25, 0.75))) ==
        doctest::Approx(1.75));

  const Scalarizer quadratic{2.0, Vec::Zero(2)};
  CHECK(mowa::scalarize(quadratic, vec2(3.0, 4.0), half) ==
        doctest::Approx(3.5355339059327378));
}

TEST_CASE("scalarize input validation") {
  const Weight half(vec2(0.5, 0.5));
  Vec three(3);
  three << 1.0, 2.0, 3.0;
  CHECK_THROWS_AS(mowa::scalarize(mowa::chebyshev(Vec::Zero(2)), three, half),
                  std::invalid_argument);
  CHECK_THROWS_AS(mowa::scalarize(Scalarizer{0.5, Vec::Zero(2)}, vec2(1, 2), half),
                  std::invalid_argument);
  Vec bad = vec2(1.0, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(mowa::scalarize(mowa::chebyshev(Vec::Zero(2)), bad, half),
                  std::invalid_argument);
}

TEST_CASE("monotonicity and homogeneity properties") {
  mowa::Rng rng(404);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double ps[] = {1.0, 1.5, 2.0, 4.0, std::numeric_limits<double>::infinity()};
  for (int trial = 0; trial < 200; ++trial) {
    const double w1 = 0.05 + 0.9 * unif(rng);
    const Weight w(vec2(w1, 1.0 - w1));
    Vec ideal = vec2(-unif(rng), -unif(rng));
    Vec base = vec2(ideal(0) + unif(rng) + 0.1, ideal(1) + unif(rng) + 0.1);
    Vec bigger = base + vec2(unif(rng), unif(rng));
    for (double p : ps) {
      const Scalarizer s{p, ideal};
      CHECK(mowa::scalarize(s, bigger, w) >= mowa::scalarize(s, base, w) - 1e-12);

      const double t = 2.0 * unif(rng);
      const Vec direction = base - ideal;
      const double at_unit = mowa::scalarize(s, ideal + direction, w);
      const double at_t = mowa::scalarize(s, ideal + t * direction, w);
      CHECK(at_t == doctest::Approx(t * at_unit).epsilon(1e-10));
    }
  }
}

TEST_CASE("default ideal points") {
  const Problem lame = Problem::lame(2, 0.25);
  CHECK(mowa::default_ideal(lame).isZero(0.0));

  const Problem idtlz1 = Problem::inverted_dtlz1();
  CHECK(mowa::default_ideal(idtlz1).isZero(0.0));
  CHECK(mowa::default_ideal(idtlz1).size() == 3);

  const Vec shifted = mowa::default_ideal(lame, 1e-3);
  CHECK(shifted(0) == doctest::Approx(-1e-3));
  CHECK(shifted(1) == doctest::Approx(-1e-3));
  CHECK_THROWS_AS(mowa::default_ideal(lame, -0.1), std::invalid_argument);
}
