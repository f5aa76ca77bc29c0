#include "mowa/run.hpp"

#include <chrono>

namespace mowa {

int reference_count(int num_objectives) {
  return num_objectives == 2 ? 2000 : 5000;
}

RunRecord run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const Problem problem = Problem::from_id(cfg.problem_id);
  const int m = problem.num_objectives();

  const auto start = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);

  std::vector<Weight> initial = cfg.init == WeightInit::kLattice
                                    ? das_dennis_lattice(m, cfg.lattice_h)
                                    : sample_uniform_simplex(m, cfg.n_weights, rng);
  const WeightEnsemble ensemble(std::move(initial));

  const Scalarizer scalarizer{cfg.p, default_ideal(problem, cfg.ideal_offset)};
  const Potential potential = cfg.potential_kind == Potential::Kind::kMorse
                                  ? Potential::morse(cfg.potential_param)
                                  : Potential::riesz(cfg.potential_param);
  const AdaptConfig adapt_cfg{cfg.dynamics, cfg.tau, cfg.zeta, potential};

  SolveResult solved;
  if (cfg.oracle_solver) {
    solved = solve_with_oracle(problem, ensemble, scalarizer, adapt_cfg,
                               cfg.adapt_steps, rng);
  } else {
    CboConfig cbo_cfg;
    cbo_cfg.alpha = cfg.alpha;
    cbo_cfg.lambda = cfg.lambda;
    cbo_cfg.sigma = cfg.sigma;
    cbo_cfg.dt = cfg.dt;
    cbo_cfg.n = cfg.n_agents;
    cbo_cfg.t_k = cfg.t_k;
    cbo_cfg.s_max = cfg.s_max;
    cbo_cfg.shared_consensus = cfg.shared_consensus;
    cbo_cfg.threads = cfg.threads;
    solved = solve_mcbo(problem, ensemble, scalarizer, cbo_cfg, adapt_cfg,
                        cfg.adapt_steps, rng);
  }

  RunRecord record;
  record.config = cfg;
  record.reference_seed = kReferenceSeed;
  record.reference_points = reference_count(m);
  Rng reference_rng(kReferenceSeed);
  const std::vector<Vec> reference =
      problem.sample_front(record.reference_points, reference_rng);
  const Potential energy_kernel = Potential::morse(30.0);

  record.steps.reserve(solved.samples.size());
  for (const TrajectorySample& sample : solved.samples) {
    StepSample step;
    step.k = sample.k;
    step.weights = sample.weights;
    step.front = sample.images;
    step.energy = front_energy(energy_kernel, sample.images);
    step.igd = igd(reference, sample.images);
    record.steps.push_back(std::move(step));
  }

  record.final_weights = solved.final_weights.weights;
  record.final_front = std::move(solved.final_images);
  record.final_decisions = std::move(solved.final_decisions);

  const auto end = std::chrono::steady_clock::now();
  record.duration_seconds = std::chrono::duration<double>(end - start).count();
  return record;
}

std::vector<RunRecord> run_repeats(const ExperimentConfig& cfg) {
  validate_config(cfg);
  std::vector<RunRecord> records;
  records.reserve(static_cast<std::size_t>(cfg.repeats));
  for (int r = 0; r < cfg.repeats; ++r) {
    ExperimentConfig run_cfg = cfg;
    run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(r);
    run_cfg.repeats = 1;
    records.push_back(run_experiment(run_cfg));
  }
  return records;
}

}  // namespace mowa
