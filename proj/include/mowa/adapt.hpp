#pragma once

#include <vector>

#include "mowa/potential.hpp"
#include "mowa/simplex.hpp"

namespace mowa {

/// Weight-adaptation dynamics. All of them project back onto the simplex and
/// increment the step counter; they differ in how the displacement is built
/// from the current objective-space configuration.
enum class Dynamics {
  kFixed,          // no adaptation (a-priori weights baseline)
  kGradImage,      // image-space repulsion gradient added to the weights (m = 2)
  kPairwise,       // weight-space direction, image-space magnitude
  kPairwiseNoise,  // pairwise step plus post-projection Gaussian noise
};

struct AdaptConfig {
  Dynamics dynamics = Dynamics::kPairwise;
  double tau = 1e-2;   // step length
  double zeta = 0.0;   // noise scale (pairwise-noise only)
  Potential potential = Potential::morse(30.0);
};

/// Per-weight displacement (tau/N) sum_j grad U(F_i - F_j). Requires m = 2.
std::vector<Vec> grad_image_forces(const WeightEnsemble& ensemble,
                                   const std::vector<Vec>& fronts,
                                   const AdaptConfig& cfg);

/// Per-weight displacement -(tau/N) sum_j DU(|F_i - F_j|) (W_i - W_j)/|W_i - W_j|.
/// Pairs with coincident weights contribute zero force.
std::vector<Vec> pairwise_forces(const WeightEnsemble& ensemble,
                                 const std::vector<Vec>& fronts,
                                 const AdaptConfig& cfg);

WeightEnsemble step_fixed(const WeightEnsemble& ensemble,
                          const std::vector<Vec>& fronts,
                          const AdaptConfig& cfg);

WeightEnsemble step_grad_image(const WeightEnsemble& ensemble,
                               const std::vector<Vec>& fronts,
                               const AdaptConfig& cfg);

WeightEnsemble step_pairwise(const WeightEnsemble& ensemble,
                             const std::vector<Vec>& fronts,
                             const AdaptConfig& cfg);

/// Two-stage update: the pairwise step (with its projection), then zeta * B_i
/// with B_i ~ N(0, I_m) drawn per weight in index order, then a second
/// projection.
WeightEnsemble step_pairwise_noise(const WeightEnsemble& ensemble,
                                   const std::vector<Vec>& fronts,
                                   const AdaptConfig& cfg, Rng& rng);

/// Dispatch on cfg.dynamics. The rng is consumed only by pairwise-noise.
WeightEnsemble adapt_step(const WeightEnsemble& ensemble,
                          const std::vector<Vec>& fronts,
                          const AdaptConfig& cfg, Rng& rng);

}  // namespace mowa
