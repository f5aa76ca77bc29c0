#include "mowa/problems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mowa {

namespace {

constexpr double kHalfPi = kPi / 2.0;

void check_box(const Vec& x, int dim) {
  if (x.size() != dim) {
    throw std::invalid_argument("evaluate: expected a " + std::to_string(dim) +
                                "-dimensional decision point");
  }
  for (Eigen::Index l = 0; l < x.size(); ++l) {
    if (!std::isfinite(x(l)) || x(l) < -1e-12 || x(l) > 1.0 + 1e-12) {
      throw std::invalid_argument("evaluate: decision point outside [0,1]^d");
    }
  }
}

std::string format_gamma(double gamma) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", gamma);
  return buf;
}

/// Positive-orthant unit-sphere coordinates from m-1 angles:
/// s_1 = prod cos(theta_j), s_l = sin(theta_{l-1}) prod_{j>=l} cos(theta_j),
/// s_m = sin(theta_{m-1}).
Vec sphere_coords(const Vec& theta) {
  const int m = static_cast<int>(theta.size()) + 1;
  Vec suffix(m);  // suffix(l) = prod_{j=l}^{m-2} cos(theta_j)
  suffix(m - 1) = 1.0;
  for (int l = m - 2; l >= 0; --l) {
    suffix(l) = suffix(l + 1) * std::cos(theta(l));
  }
  Vec s(m);
  s(0) = suffix(0);
  for (int l = 1; l < m; ++l) {
    s(l) = std::sin(theta(l - 1)) * suffix(l);
  }
  // cos(pi/2) evaluates to ~6e-17 and may round negative; clamp so that the
  // fractional powers below stay real.
  return s.cwiseMax(0.0);
}

Vec lame_objectives(const Vec& theta, double g, double gamma) {
  const Vec s = sphere_coords(theta);
  const double expo = 2.0 / gamma;
  Vec f(s.size());
  for (Eigen::Index l = 0; l < s.size(); ++l) {
    f(l) = (1.0 + g) * std::pow(s(l), expo);
  }
  return f;
}

Vec idtlz1_objectives(const Vec& x) {
  const double t = x(2) - 0.5;
  const double g = 100.0 * (1.0 + t * t - std::cos(20.0 * kPi * t));
  const double scale = 0.5 * (1.0 + g);
  Vec f(3);
  f(0) = scale - scale * x(0) * x(1);
  f(1) = scale - scale * x(0) * (1.0 - x(1));
  f(2) = scale - scale * (1.0 - x(0));
  return f;
}

void check_front_point(const Vec& y, int m) {
  if (y.size() != m) {
    throw std::invalid_argument("front point has wrong dimension");
  }
  for (Eigen::Index l = 0; l < y.size(); ++l) {
    if (!std::isfinite(y(l)) || y(l) < -1e-12) {
      throw std::invalid_argument("front point must be finite and nonnegative");
    }
  }
}

/// |d f / d theta| for the m = 2 Lame front curve theta -> f(theta).
double lame_curve_speed(double theta, double expo) {
  const double c = std::max(std::cos(theta), 0.0);
  const double s = std::max(std::sin(theta), 0.0);
  const double a = std::pow(c, expo - 1.0) * s;
  const double b = std::pow(s, expo - 1.0) * c;
  return expo * std::sqrt(a * a + b * b);
}

/// Surface-area element |d1 f x d2 f| of the m = 3 Lame front patch.
double lame_surface_element(double t0, double t1, double expo) {
  const double c0 = std::cos(t0), s0 = std::sin(t0);
  const double c1 = std::cos(t1), s1 = std::sin(t1);
  const double sc[3] = {std::max(c0 * c1, 0.0), std::max(s0 * c1, 0.0),
                        std::max(s1, 0.0)};
  const double ds0[3][2] = {{-s0 * c1, -c0 * s1},
                            {c0 * c1, -s0 * s1},
                            {0.0, c1}};
  double d0[3], d1[3];
  for (int l = 0; l < 3; ++l) {
    const double factor = expo * std::pow(sc[l], expo - 1.0);
    d0[l] = factor * ds0[l][0];
    d1[l] = factor * ds0[l][1];
  }
  const double cx = d0[1] * d1[2] - d0[2] * d1[1];
  const double cy = d0[2] * d1[0] - d0[0] * d1[2];
  const double cz = d0[0] * d1[1] - d0[1] * d1[0];
  return std::sqrt(cx * cx + cy * cy + cz * cz);
}

}  // namespace

Problem::Problem(Family family, int num_objectives, double gamma, std::string id)
    : family_(family), num_objectives_(num_objectives), gamma_(gamma), id_(std::move(id)) {}

Problem Problem::lame(int num_objectives, double gamma) {
  if (num_objectives < 2 || num_objectives > 3) {
    throw std::invalid_argument("lame: supported objective counts are 2 and 3");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("lame: gamma must be strictly positive");
  }
  std::string id = "lame" + std::to_string(num_objectives) + "_g" + format_gamma(gamma);
  return Problem(Family::kLame, num_objectives, gamma, std::move(id));
}

Problem Problem::inverted_dtlz1() {
  return Problem(Family::kInvertedDtlz1, 3, 0.0, "idtlz1_3");
}

Problem Problem::from_id(const std::string& id) {
  if (id == "idtlz1_3") {
    return inverted_dtlz1();
  }
  if (id.rfind("lame", 0) == 0) {
    const std::size_t underscore = id.find("_g", 4);
    if (underscore != std::string::npos) {
      try {
        const int m = std::stoi(id.substr(4, underscore - 4));
        std::size_t consumed = 0;
        const std::string gamma_text = id.substr(underscore + 2);
        const double gamma = std::stod(gamma_text, &consumed);
        if (consumed == gamma_text.size()) {
          return lame(m, gamma);
        }
      } catch (const std::invalid_argument&) {
        // fall through to the generic error below
      } catch (const std::out_of_range&) {
      }
    }
  }
  throw std::invalid_argument("unknown problem id '" + id +
                              "' (expected lame{m}_g{gamma} with m in {2,3}, "
                              "or idtlz1_3)");
}

double Problem::gamma() const {
  if (family_ != Family::kLame) {
    throw std::logic_error("gamma() is only defined for Lame problems");
  }
  return gamma_;
}

Vec Problem::evaluate(const Vec& x) const {
  check_box(x, dim());
  if (family_ == Family::kLame) {
    const int m = num_objectives_;
    Vec theta(m - 1);
    for (int j = 0; j < m - 1; ++j) theta(j) = kHalfPi * x(j);
    return lame_objectives(theta, x(m - 1), gamma_);
  }
  return idtlz1_objectives(x);
}

Vec Problem::objective_lower_bounds() const {
  return Vec::Zero(num_objectives_);
}

double Problem::front_residual(const Vec& y) const {
  check_front_point(y, num_objectives_);
  if (family_ == Family::kLame) {
    double acc = 0.0;
    for (Eigen::Index l = 0; l < y.size(); ++l) {
      acc += std::pow(std::max(y(l), 0.0), gamma_);
    }
    return std::abs(acc - 1.0);
  }
  double residual = std::abs(y.sum() - 1.0);
  for (Eigen::Index l = 0; l < y.size(); ++l) {
    residual += std::max(0.0, y(l) - 0.5);
  }
  return residual;
}

std::vector<Vec> Problem::sample_front(int count, Rng& rng) const {
  if (count < 1) {
    throw std::invalid_argument("sample_front: count must be >= 1");
  }
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(count));
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  if (family_ == Family::kInvertedDtlz1) {
    // Flat sampling of {sum f = 1, f >= 0} thinned to the caps f_l <= 0.5.
    while (static_cast<int>(out.size()) < count) {
      double a = unif(rng), b = unif(rng);
      if (a > b) std::swap(a, b);
      Vec f(3);
      f << a, b - a, 1.0 - b;
      if (f.maxCoeff() <= 0.5) out.push_back(std::move(f));
    }
    return out;
  }

  const double expo = 2.0 / gamma_;
  if (expo < 1.0) {
    throw std::invalid_argument(
        "sample_front: Lame fronts with gamma > 2 have an unbounded "
        "parametrization density; not supported");
  }

  if (num_objectives_ == 2) {
    // Uniform angles thinned against the curve speed.
    double bound = 1e-12;
    const int grid = 2048;
    for (int j = 0; j <= grid; ++j) {
      bound = std::max(bound, lame_curve_speed(kHalfPi * j / grid, expo));
    }
    bound *= 1.05;
    while (static_cast<int>(out.size()) < count) {
      const double theta = kHalfPi * unif(rng);
      if (unif(rng) * bound <= lame_curve_speed(theta, expo)) {
        Vec t(1);
        t << theta;
        out.push_back(lame_objectives(t, 0.0, gamma_));
      }
    }
    return out;
  }

  // m = 3: uniform angle pairs thinned against the surface-area element.
  double bound = 1e-12;
  const int grid = 192;
  for (int a = 0; a <= grid; ++a) {
    for (int b = 0; b <= grid; ++b) {
      bound = std::max(bound, lame_surface_element(kHalfPi * a / grid,
                                                   kHalfPi * b / grid, expo));
    }
  }
  bound *= 1.05;
  while (static_cast<int>(out.size()) < count) {
    const double t0 = kHalfPi * unif(rng);
    const double t1 = kHalfPi * unif(rng);
    if (unif(rng) * bound <= lame_surface_element(t0, t1, expo)) {
      Vec t(2);
      t << t0, t1;
      out.push_back(lame_objectives(t, 0.0, gamma_));
    }
  }
  return out;
}

std::vector<Vec> Problem::front_sweep(int count) const {
  if (num_objectives_ != 2) {
    throw std::invalid_argument("front_sweep: only defined for m = 2");
  }
  if (count < 2) {
    throw std::invalid_argument("front_sweep: need at least 2 points");
  }
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    Vec t(1);
    t << kHalfPi * j / (count - 1);
    out.push_back(lame_objectives(t, 0.0, gamma_));
  }
  return out;
}

Vec Problem::decision_from_front(const Vec& y) const {
  check_front_point(y, num_objectives_);
  if (family_ == Family::kLame) {
    Vec s(num_objectives_);
    for (Eigen::Index l = 0; l < y.size(); ++l) {
      s(l) = std::clamp(std::pow(std::max(y(l), 0.0), gamma_ / 2.0), 0.0, 1.0);
    }
    Vec x = Vec::Zero(num_objectives_);
    if (num_objectives_ == 2) {
      x(0) = std::atan2(s(1), s(0)) / kHalfPi;
    } else {
      x(0) = std::atan2(s(1), s(0)) / kHalfPi;
      x(1) = std::asin(std::clamp(s(2), 0.0, 1.0)) / kHalfPi;
    }
    for (Eigen::Index l = 0; l < x.size(); ++l) x(l) = std::clamp(x(l), 0.0, 1.0);
    return x;  // distance variable x_m = 0
  }
  // inverted DTLZ1: y = scale - h with scale = 0.5 at the optimum g = 0
  const double h0 = std::max(0.5 - y(0), 0.0);
  const double h1 = std::max(0.5 - y(1), 0.0);
  const double pair = h0 + h1;
  Vec x(3);
  x(0) = std::clamp(2.0 * pair, 0.0, 1.0);
  x(1) = pair > 1e-15 ? std::clamp(h0 / pair, 0.0, 1.0) : 0.5;
  x(2) = 0.5;
  return x;
}

}  // namespace mowa
