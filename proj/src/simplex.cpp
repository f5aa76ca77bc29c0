#include "mowa/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace mowa {

namespace {

void require_finite(const Vec& v, const char* where) {
  if (!v.allFinite()) {
    throw std::invalid_argument(std::string(where) + ": non-finite input");
  }
}

}  // namespace

Weight::Weight(Vec v) : v_(std::move(v)) {
  if (v_.size() < 2) {
    throw std::invalid_argument("Weight: need at least 2 components");
  }
  require_finite(v_, "Weight");
  double sum = 0.0;
  for (Eigen::Index l = 0; l < v_.size(); ++l) {
    if (v_(l) < -1e-9) {
      throw std::invalid_argument("Weight: negative component " +
                                  std::to_string(v_(l)));
    }
    v_(l) = std::max(v_(l), 0.0);
    sum += v_(l);
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw std::invalid_argument("Weight: components sum to " +
                                std::to_string(sum) + ", expected 1");
  }
  v_ /= sum;
}

WeightEnsemble::WeightEnsemble(std::vector<Weight> w, long step_count)
    : weights(std::move(w)), step(step_count) {
  if (weights.empty()) {
    throw std::invalid_argument("WeightEnsemble: need at least one weight");
  }
  const int m = weights.front().dim();
  for (const Weight& wi : weights) {
    if (wi.dim() != m) {
      throw std::invalid_argument("WeightEnsemble: mixed dimensions");
    }
  }
  if (step < 0) {
    throw std::invalid_argument("WeightEnsemble: negative step counter");
  }
}

Weight project_to_simplex(const Vec& v) {
  if (v.size() < 2) {
    throw std::invalid_argument("project_to_simplex: need m >= 2");
  }
  require_finite(v, "project_to_simplex");

  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumsum = 0.0;
  double threshold = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumsum += u[j];
    const double t = (cumsum - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) {
      threshold = t;
    }
  }
  Vec w = (v.array() - threshold).cwiseMax(0.0).matrix();
  return Weight(std::move(w));
}

long das_dennis_size(int m, int h) {
  if (m < 2) throw std::invalid_argument("das_dennis_size: need m >= 2");
  if (h < 1) throw std::invalid_argument("das_dennis_size: need h >= 1");
  // C(h + m - 1, m - 1) computed incrementally to stay in range.
  long result = 1;
  for (int j = 1; j <= m - 1; ++j) {
    result = result * (h + j) / j;
  }
  return result;
}

std::vector<Weight> das_dennis_lattice(int m, int h) {
  const long total = das_dennis_size(m, h);  // validates m, h
  std::vector<Weight> out;
  out.reserve(static_cast<std::size_t>(total));

  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  const std::function<void(int, int)> recurse = [&](int pos, int remaining) {
    if (pos == m - 1) {
      counts[static_cast<std::size_t>(pos)] = remaining;
      Vec w(m);
      for (int l = 0; l < m; ++l) {
        w(l) = static_cast<double>(counts[static_cast<std::size_t>(l)]) /
               static_cast<double>(h);
      }
      out.emplace_back(std::move(w));
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[static_cast<std::size_t>(pos)] = c;
      recurse(pos + 1, remaining - c);
    }
  };
  recurse(0, h);
  return out;
}

std::vector<Weight> sample_uniform_simplex(int m, int n, Rng& rng) {
  if (m < 2) throw std::invalid_argument("sample_uniform_simplex: need m >= 2");
  if (n < 1) throw std::invalid_argument("sample_uniform_simplex: need n >= 1");

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Weight> out;
  out.reserve(static_cast<std::size_t>(n));
  std::vector<double> cuts(static_cast<std::size_t>(m - 1));
  for (int i = 0; i < n; ++i) {
    for (double& c : cuts) c = unif(rng);
    std::sort(cuts.begin(), cuts.end());
    Vec w(m);
    double prev = 0.0;
    for (int l = 0; l < m - 1; ++l) {
      w(l) = cuts[static_cast<std::size_t>(l)] - prev;
      prev = cuts[static_cast<std::size_t>(l)];
    }
    w(m - 1) = 1.0 - prev;
    out.emplace_back(std::move(w));
  }
  return out;
}

}  // namespace mowa
