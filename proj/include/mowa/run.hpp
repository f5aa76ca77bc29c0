#pragma once

#include <vector>

#include "mowa/cbo.hpp"
#include "mowa/config.hpp"
#include "mowa/metrics.hpp"

namespace mowa {

/// Seed of the dedicated stream that generates IGD reference fronts; fixed so
/// runs on the same problem share one reference set.
inline constexpr std::uint64_t kReferenceSeed = 987654321;

/// Reference-set size used for IGD (2000 points for m = 2, 5000 for m = 3).
int reference_count(int num_objectives);

/// One recorded adaptation step: weights, front, metric values.
struct StepSample {
  long k = 0;
  std::vector<Weight> weights;
  std::vector<Vec> front;
  double energy = 0.0;
  double igd = 0.0;
};

/// Everything produced by one experiment. Re-running from the embedded config
/// (including its seed) reproduces the record bit-exactly.
struct RunRecord {
  ExperimentConfig config;
  std::vector<StepSample> steps;
  std::vector<Weight> final_weights;
  std::vector<Vec> final_front;
  std::vector<Vec> final_decisions;
  std::uint64_t reference_seed = kReferenceSeed;
  int reference_points = 0;
  double duration_seconds = 0.0;
};

/// Executes the configured experiment (multi-swarm CBO or the analytic
/// oracle) and computes the metric series. The energy metric always uses the
/// Morse C = 30 kernel so runs with different dynamics potentials stay
/// comparable.
RunRecord run_experiment(const ExperimentConfig& cfg);

/// cfg.repeats independent runs with seeds cfg.seed + 0 .. + repeats-1.
std::vector<RunRecord> run_repeats(const ExperimentConfig& cfg);

}  // namespace mowa
