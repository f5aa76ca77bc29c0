#include "mowa/adapt.hpp"

#include <stdexcept>

namespace mowa {

namespace {

void check_inputs(const WeightEnsemble& ensemble, const std::vector<Vec>& fronts) {
  if (ensemble.size() < 1) {
    throw std::invalid_argument("adapt: empty weight ensemble");
  }
  if (static_cast<int>(fronts.size()) != ensemble.size()) {
    throw std::invalid_argument("adapt: front count does not match weight count");
  }
  const Eigen::Index image_dim = fronts.front().size();
  for (const Vec& f : fronts) {
    if (f.size() != image_dim) {
      throw std::invalid_argument("adapt: mixed front dimensions");
    }
    if (!f.allFinite()) {
      throw std::invalid_argument("adapt: non-finite front point");
    }
  }
}

}  // namespace

std::vector<Vec> grad_image_forces(const WeightEnsemble& ensemble,
                                   const std::vector<Vec>& fronts,
                                   const AdaptConfig& cfg) {
  check_inputs(ensemble, fronts);
  if (ensemble.dim() != 2 || fronts.front().size() != 2) {
    throw std::invalid_argument(
        "grad-image dynamics is defined for m = 2 objectives only");
  }
  const int n = ensemble.size();
  std::vector<Vec> forces(static_cast<std::size_t>(n), Vec::Zero(2));
  for (int i = 0; i < n; ++i) {
    Vec acc = Vec::Zero(2);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;  // grad U(0) = 0
      acc += cfg.potential.gradient(fronts[static_cast<std::size_t>(i)] -
                                    fronts[static_cast<std::size_t>(j)]);
    }
    forces[static_cast<std::size_t>(i)] = (cfg.tau / n) * acc;
  }
  return forces;
}

std::vector<Vec> pairwise_forces(const WeightEnsemble& ensemble,
                                 const std::vector<Vec>& fronts,
                                 const AdaptConfig& cfg) {
  check_inputs(ensemble, fronts);
  const int n = ensemble.size();
  const int m = ensemble.dim();
  std::vector<Vec> forces(static_cast<std::size_t>(n), Vec::Zero(m));
  for (int i = 0; i < n; ++i) {
    Vec acc = Vec::Zero(m);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const Vec dw = ensemble.weights[static_cast<std::size_t>(i)].values() -
                     ensemble.weights[static_cast<std::size_t>(j)].values();
      const double dw_norm = dw.norm();
      if (dw_norm == 0.0) continue;  // direction undefined: zero by convention
      const double r = (fronts[static_cast<std::size_t>(i)] -
                        fronts[static_cast<std::size_t>(j)])
                           .norm();
      acc -= cfg.potential.radial_derivative(r) * (dw / dw_norm);
    }
    forces[static_cast<std::size_t>(i)] = (cfg.tau / n) * acc;
  }
  return forces;
}

WeightEnsemble step_fixed(const WeightEnsemble& ensemble,
                          const std::vector<Vec>& fronts,
                          const AdaptConfig& /*cfg*/) {
  check_inputs(ensemble, fronts);
  return WeightEnsemble(ensemble.weights, ensemble.step + 1);
}

WeightEnsemble step_grad_image(const WeightEnsemble& ensemble,
                               const std::vector<Vec>& fronts,
                               const AdaptConfig& cfg) {
  const auto forces = grad_image_forces(ensemble, fronts, cfg);
  std::vector<Weight> next;
  next.reserve(forces.size());
  for (std::size_t i = 0; i < forces.size(); ++i) {
    next.push_back(project_to_simplex(ensemble.weights[i].values() + forces[i]));
  }
  return WeightEnsemble(std::move(next), ensemble.step + 1);
}

WeightEnsemble step_pairwise(const WeightEnsemble& ensemble,
                             const std::vector<Vec>& fronts,
                             const AdaptConfig& cfg) {
  const auto forces = pairwise_forces(ensemble, fronts, cfg);
  std::vector<Weight> next;
  next.reserve(forces.size());
  for (std::size_t i = 0; i < forces.size(); ++i) {
    next.push_back(project_to_simplex(ensemble.weights[i].values() + forces[i]));
  }
  return WeightEnsemble(std::move(next), ensemble.step + 1);
}

WeightEnsemble step_pairwise_noise(const WeightEnsemble& ensemble,
                                   const std::vector<Vec>& fronts,
                                   const AdaptConfig& cfg, Rng& rng) {
  if (!(cfg.zeta > 0.0)) {
    throw std::invalid_argument("pairwise-noise dynamics requires zeta > 0");
  }
  const auto forces = pairwise_forces(ensemble, fronts, cfg);
  const int m = ensemble.dim();
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Weight> next;
  next.reserve(forces.size());
  // Noise is drawn per weight in index order from the run's stream.
  for (std::size_t i = 0; i < forces.size(); ++i) {
    const Weight half = project_to_simplex(ensemble.weights[i].values() + forces[i]);
    Vec noise(m);
    for (int l = 0; l < m; ++l) noise(l) = normal(rng);
    next.push_back(project_to_simplex(half.values() + cfg.zeta * noise));
  }
  return WeightEnsemble(std::move(next), ensemble.step + 1);
}

WeightEnsemble adapt_step(const WeightEnsemble& ensemble,
                          const std::vector<Vec>& fronts,
                          const AdaptConfig& cfg, Rng& rng) {
  switch (cfg.dynamics) {
    case Dynamics::kFixed:
      return step_fixed(ensemble, fronts, cfg);
    case Dynamics::kGradImage:
      return step_grad_image(ensemble, fronts, cfg);
    case Dynamics::kPairwise:
      return step_pairwise(ensemble, fronts, cfg);
    case Dynamics::kPairwiseNoise:
      return step_pairwise_noise(ensemble, fronts, cfg, rng);
  }
  throw std::invalid_argument("adapt_step: unknown dynamics");
}

}  // namespace mowa
