// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run all criteria or a subset by listing criterion numbers as
// arguments.
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mowa/cbo.hpp"
#include "mowa/config.hpp"
#include "mowa/io.hpp"
#include "mowa/metrics.hpp"
#include "mowa/run.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;

using mowa::AdaptConfig;
using mowa::CboConfig;
using mowa::Dynamics;
using mowa::ExperimentConfig;
using mowa::Potential;
using mowa::Problem;
using mowa::Rng;
using mowa::Scalarizer;
using mowa::Vec;
using mowa::Weight;
using mowa::WeightEnsemble;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& message) {
    if (!condition) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << message;
    }
  }
  void note(const std::string& message) {
    if (detail.tellp() > 0) detail << "; ";
    detail << message;
  }
};

std::string fnum(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double final_energy_oracle(const Problem& problem, const WeightEnsemble& initial,
                           Dynamics dynamics, double zeta, std::uint64_t seed,
                           double* initial_energy = nullptr) {
  const Scalarizer cheb = mowa::chebyshev(Vec::Zero(problem.num_objectives()));
  const AdaptConfig adapt{dynamics, 1e-2, zeta, Potential::morse(30.0)};
  Rng rng(seed);
  const auto result = mowa::solve_with_oracle(problem, initial, cheb, adapt, 200, rng);
  const Potential morse = Potential::morse(30.0);
  if (initial_energy != nullptr) {
    *initial_energy = mowa::ensemble_energy(morse, result.samples.front().images);
  }
  return mowa::ensemble_energy(morse, result.samples.back().images);
}

ExperimentConfig desk_config(const std::string& problem, Dynamics dynamics,
                             std::uint64_t seed, int threads = 1) {
  ExperimentConfig cfg = mowa::default_config(problem);
  cfg.dynamics = dynamics;
  cfg.s_max = 50 * cfg.t_k;  // desk scale
  cfg.adapt_steps = 50;
  cfg.seed = seed;
  cfg.threads = threads;
  return cfg;
}

std::vector<double> final_igds(const ExperimentConfig& base, int repeats) {
  ExperimentConfig cfg = base;
  cfg.repeats = repeats;
  std::vector<double> out;
  for (const auto& record : mowa::run_repeats(cfg)) {
    out.push_back(record.steps.back().igd);
  }
  return out;
}

std::vector<double> final_energies(const ExperimentConfig& base, int repeats) {
  ExperimentConfig cfg = base;
  cfg.repeats = repeats;
  std::vector<double> out;
  for (const auto& record : mowa::run_repeats(cfg)) {
    out.push_back(record.steps.back().energy);
  }
  return out;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Emits one run's CSV outputs and returns their concatenated bytes.
std::string csv_bytes(const ExperimentConfig& cfg, const fs::path& dir) {
  fs::remove_all(dir);
  mowa::emit_outputs(mowa::run_experiment(cfg), dir);
  return slurp(dir / "front.csv") + "\n--\n" + slurp(dir / "metrics.csv");
}

// --- criteria -------------------------------------------------------------

void criterion_projection(Check& check) {
  Rng rng(20250801);
  std::normal_distribution<double> normal(0.0, 2.0);
  double worst = 0.0;
  for (int m : {2, 3, 5}) {
    for (int trial = 0; trial < 1000; ++trial) {
      Vec v(m);
      for (int l = 0; l < m; ++l) v(l) = normal(rng) + 0.3;
      const Vec projected = mowa::project_to_simplex(v).values();
      const Vec oracle = mowa::testing::project_simplex_qp(v);
      worst = std::max(worst, (projected - oracle).lpNorm<Eigen::Infinity>());
    }
  }
  check.require(worst <= 1e-9, "max deviation " + fnum(worst) + " > 1e-9");
  check.note("max |proj - qp oracle| = " + fnum(worst) + " over 3000 points");
}

void criterion_gradient(Check& check) {
  Rng rng(20250802);
  std::uniform_real_distribution<double> radius(0.05, 2.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  double worst = 0.0;
  for (const Potential& u : {Potential::morse(30.0), Potential::riesz(1.0),
                             Potential::riesz(2.0)}) {
    for (int m : {2, 3}) {
      for (int trial = 0; trial < 100; ++trial) {
        Vec direction(m);
        for (int l = 0; l < m; ++l) direction(l) = normal(rng);
        if (direction.norm() < 1e-9) continue;
        const Vec z = radius(rng) * direction.normalized();
        const Vec expected = mowa::testing::finite_difference_gradient(u, z, 1e-6);
        worst = std::max(worst, (u.gradient(z) - expected).lpNorm<Eigen::Infinity>());
      }
    }
  }
  check.require(worst <= 1e-5, "max gradient error " + fnum(worst) + " > 1e-5");
  check.note("max |grad - fd| = " + fnum(worst));
}

void criterion_weak_pareto(Check& check) {
  Rng rng(20250803);
  double worst_residual = 0.0;
  double worst_excess = -1.0;
  for (const char* id : {"lame2_g0.25", "lame3_g0.5", "lame3_g2", "idtlz1_3"}) {
    const Problem problem = Problem::from_id(id);
    const Scalarizer cheb = mowa::chebyshev(Vec::Zero(problem.num_objectives()));
    const auto grid = mowa::testing::front_grid(problem, 10000);
    for (const Weight& w :
         mowa::sample_uniform_simplex(problem.num_objectives(), 200, rng)) {
      const Vec y = mowa::oracle_solve(problem, w, cheb);
      worst_residual = std::max(worst_residual, problem.front_residual(y));
      const double value = mowa::scalarize(cheb, y, w);
      const double grid_min = mowa::testing::chebyshev_minimum_on(grid, w, cheb.ideal);
      worst_excess = std::max(worst_excess, value - grid_min);
    }
  }
  check.require(worst_residual <= 1e-8,
                "front residual " + fnum(worst_residual) + " > 1e-8");
  check.require(worst_excess <= 1e-6,
                "oracle exceeds grid minimum by " + fnum(worst_excess));
  check.note("800 weights: max residual " + fnum(worst_residual) +
             ", max excess over grid min " + fnum(worst_excess));
}

void criterion_energy_descent(Check& check) {
  const Problem problem = Problem::lame(2, 0.25);
  const WeightEnsemble initial(mowa::das_dennis_lattice(2, 14));
  for (Dynamics dynamics : {Dynamics::kGradImage, Dynamics::kPairwise}) {
    std::vector<double> finals;
    double initial_energy = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      finals.push_back(
          final_energy_oracle(problem, initial, dynamics, 0.0, seed, &initial_energy));
    }
    const double med = mowa::median(finals);
    check.require(med < initial_energy,
                  std::string(mowa::to_string(dynamics)) + ": median " + fnum(med) +
                      " not below initial " + fnum(initial_energy));
    check.note(std::string(mowa::to_string(dynamics)) + " " + fnum(med) + " < init " +
               fnum(initial_energy));
  }
}

void criterion_noise_improves(Check& check) {
  const Problem problem = Problem::lame(2, 0.25);
  const WeightEnsemble initial(mowa::das_dennis_lattice(2, 14));
  std::vector<double> without, with;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    without.push_back(final_energy_oracle(problem, initial, Dynamics::kPairwise, 0.0, seed));
    with.push_back(
        final_energy_oracle(problem, initial, Dynamics::kPairwiseNoise, 1e-9, seed));
  }
  const double med_without = mowa::median(without);
  const double med_with = mowa::median(with);
  check.require(med_with <= med_without, "noise median " + fnum(med_with) +
                                             " > plain median " + fnum(med_without));
  check.note("pairwise-noise " + fnum(med_with) + " <= pairwise " + fnum(med_without));
}

void criterion_adaptive_beats_fixed(Check& check) {
  for (const char* id : {"lame3_g0.5", "lame3_g2"}) {
    const auto fixed = mowa::median(final_igds(desk_config(id, Dynamics::kFixed, 42), 5));
    const auto pairwise =
        mowa::median(final_igds(desk_config(id, Dynamics::kPairwise, 42), 5));
    const auto noisy =
        mowa::median(final_igds(desk_config(id, Dynamics::kPairwiseNoise, 42), 5));
    check.require(pairwise < fixed, std::string(id) + ": pairwise " + fnum(pairwise) +
                                        " not below fixed " + fnum(fixed));
    check.require(noisy < fixed, std::string(id) + ": pairwise-noise " + fnum(noisy) +
                                     " not below fixed " + fnum(fixed));
    check.note(std::string(id) + " igd: fixed " + fnum(fixed) + ", pairwise " +
               fnum(pairwise) + ", pairwise-noise " + fnum(noisy));
  }
}

void criterion_idtlz1_noise_neutral(Check& check) {
  const auto plain =
      mowa::median(final_energies(desk_config("idtlz1_3", Dynamics::kPairwise, 42), 5));
  const auto noisy = mowa::median(
      final_energies(desk_config("idtlz1_3", Dynamics::kPairwiseNoise, 42), 5));
  const double gap = std::abs(noisy - plain);
  check.require(gap <= 0.15 * plain, "energy gap " + fnum(gap) + " exceeds 15% of " +
                                         fnum(plain));
  check.note("pairwise " + fnum(plain) + ", pairwise-noise " + fnum(noisy) + ", gap " +
             fnum(100.0 * gap / plain) + "%");
}

void criterion_cbo_sanity(Check& check) {
  // Exact geometric contraction with sigma = 0 and a fixed consensus target.
  CboConfig cfg;
  cfg.sigma = 0.0;
  Rng rng(20250808);
  Vec target(2), start(2);
  target << 0.3, 0.4;
  start << 0.95, 0.1;
  mowa::Swarm swarm;
  swarm.subproblems = 1;
  swarm.per_subproblem = 1;
  swarm.agents = {start};
  const double initial_distance = (start - target).norm();
  double worst = 0.0;
  for (int s = 1; s <= 100; ++s) {
    swarm = mowa::cbo_step(std::move(swarm), {target}, cfg, rng);
    const double expected = std::pow(1.0 - cfg.lambda * cfg.dt, s) * initial_distance;
    worst = std::max(worst, std::abs((swarm.agents[0] - target).norm() - expected));
  }
  check.require(worst <= 1e-12, "contraction deviates by " + fnum(worst));

  // Single sub-problem w = (1,0) on the quarter circle: the solver has to
  // drive f1 to (nearly) zero.
  const Problem problem = Problem::lame(2, 2.0);
  Vec w(2);
  w << 1.0, 0.0;
  const WeightEnsemble single({Weight(w)});
  const Scalarizer cheb = mowa::chebyshev(Vec::Zero(2));
  const AdaptConfig adapt{Dynamics::kFixed, 1e-2, 0.0, Potential::morse(30.0)};
  std::vector<double> f1;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng run_rng(seed);
    const auto result =
        mowa::solve_mcbo(problem, single, cheb, CboConfig{}, adapt, 200, run_rng);
    f1.push_back(result.final_images.front()(0));
  }
  const double med = mowa::median(f1);
  check.require(med <= 1e-2, "median f1 " + fnum(med) + " > 1e-2");
  check.note("contraction error " + fnum(worst) + ", median f1 " + fnum(med));
}

void criterion_full_scale_smoke(Check& check) {
  ExperimentConfig cfg = mowa::default_config("lame2_g0.25");  // s_max = 10^4
  cfg.seed = 42;
  const mowa::RunRecord record = mowa::run_experiment(cfg);

  check.require(record.steps.back().k == 200,
                "k reached " + std::to_string(record.steps.back().k));
  check.require(record.steps.size() == 201,
                "expected 201 metric samples, got " +
                    std::to_string(record.steps.size()));
  for (const auto& step : record.steps) {
    for (const Weight& weight : step.weights) {
      check.require(weight.values().minCoeff() >= 0.0, "negative weight component");
      check.require(std::abs(weight.values().sum() - 1.0) <= 1e-12,
                    "weight sum violation");
    }
    for (const Vec& y : step.front) {
      check.require(y.allFinite() && y.minCoeff() >= 0.0, "invalid front point");
    }
    check.require(std::isfinite(step.energy) && step.energy >= 0.0, "bad energy");
    check.require(std::isfinite(step.igd) && step.igd >= 0.0, "bad igd");
  }
  for (const Vec& x : record.final_decisions) {
    check.require(x.minCoeff() >= 0.0 && x.maxCoeff() <= 1.0,
                  "decision outside the box");
  }
  check.note("k = 200, 201 samples, trajectory invariants hold, " +
             fnum(record.duration_seconds) + " s");
}

void criterion_determinism(Check& check) {
  const fs::path base =
      fs::temp_directory_path() / ("mowa_acceptance_" + std::to_string(::getpid()));

  // Oracle-driven runs (criteria 4/5 pipeline).
  ExperimentConfig oracle = mowa::default_config("lame2_g0.25");
  oracle.oracle_solver = true;
  oracle.dynamics = Dynamics::kPairwiseNoise;
  oracle.seed = 3;
  check.require(csv_bytes(oracle, base / "a1") == csv_bytes(oracle, base / "a2"),
                "oracle run not reproducible");

  // Desk-scale multi-swarm runs (criteria 6/7 pipeline), including the
  // grad-image and fixed dynamics and a 1-thread vs 4-thread comparison.
  const struct {
    const char* problem;
    Dynamics dynamics;
  } cases[] = {
      {"lame3_g0.5", Dynamics::kPairwiseNoise},
      {"lame3_g2", Dynamics::kFixed},
      {"idtlz1_3", Dynamics::kPairwise},
      {"lame2_g0.25", Dynamics::kGradImage},
  };
  int index = 0;
  for (const auto& [id, dynamics] : cases) {
    const std::string tag = "b" + std::to_string(index++);
    const ExperimentConfig one = desk_config(id, dynamics, 42, 1);
    const ExperimentConfig four = desk_config(id, dynamics, 42, 4);
    const std::string first = csv_bytes(one, base / (tag + "_1"));
    check.require(first == csv_bytes(one, base / (tag + "_2")),
                  std::string(id) + ": rerun differs");
    check.require(first == csv_bytes(four, base / (tag + "_4")),
                  std::string(id) + ": thread count changes bytes");
  }

  // Full-scale smoke configuration (criterion 9 pipeline).
  ExperimentConfig full = mowa::default_config("lame2_g0.25");
  full.seed = 42;
  ExperimentConfig full4 = full;
  full4.threads = 4;
  const std::string full_bytes = csv_bytes(full, base / "c1");
  check.require(full_bytes == csv_bytes(full, base / "c2"), "full run not reproducible");
  check.require(full_bytes == csv_bytes(full4, base / "c4"),
                "full run differs across thread counts");

  fs::remove_all(base);
  check.note("oracle, desk-scale (4 dynamics) and full-scale runs byte-identical "
             "across reruns and 1 vs 4 threads");
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_seconds;  // 0 = report only
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "simplex projection matches the active-set QP oracle", 1.0,
       criterion_projection},
      {2, "potential gradients match central finite differences", 1.0,
       criterion_gradient},
      {3, "oracle solutions are weakly Pareto optimal Chebyshev minimizers", 10.0,
       criterion_weak_pareto},
      {4, "oracle-driven adaptation lowers the Morse energy (lame2_g0.25)", 10.0,
       criterion_energy_descent},
      {5, "noise does not increase the final energy (lame2_g0.25)", 10.0,
       criterion_noise_improves},
      {6, "adaptive dynamics beat fixed weights in IGD (tri-objective Lame)", 0.0,
       criterion_adaptive_beats_fixed},
      {7, "noise is energy-neutral on inverted DTLZ1", 300.0,
       criterion_idtlz1_noise_neutral},
      {8, "CBO contraction is exact and the solver minimizes f1", 30.0,
       criterion_cbo_sanity},
      {9, "full-scale run completes with k = 200 and valid trajectory", 120.0,
       criterion_full_scale_smoke},
      {10, "byte-identical outputs across reruns and thread counts", 0.0,
       criterion_determinism},
  };

  std::set<int> selected;
  for (int a = 1; a < argc; ++a) selected.insert(std::atoi(argv[a]));

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (!selected.empty() && selected.count(criterion.id) == 0) continue;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.time_limit_seconds > 0.0 && elapsed > criterion.time_limit_seconds) {
      check.require(false, "runtime " + fnum(elapsed) + " s exceeds " +
                               fnum(criterion.time_limit_seconds) + " s");
    }
    std::printf("[%s] criterion %2d: %s (%s) [%.2f s]\n", check.ok ? "PASS" : "FAIL",
                criterion.id, criterion.name, check.detail.str().c_str(), elapsed);
    std::fflush(stdout);
    if (!check.ok) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures;
}
