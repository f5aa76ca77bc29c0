#include "mowa/cbo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "mowa/parallel.hpp"

namespace mowa {

namespace {

std::string agent_diagnostic(const Problem& problem, long iteration, int i, int h,
                             const Vec& x) {
  std::ostringstream msg;
  msg << "non-finite objective value on problem '" << problem.id()
      << "' at iteration " << iteration << ", sub-problem " << i << ", agent "
      << h << ", x = [";
  for (Eigen::Index l = 0; l < x.size(); ++l) {
    if (l > 0) msg << ", ";
    msg << x(l);
  }
  msg << "]";
  return msg.str();
}

}  // namespace

void validate(const CboConfig& cfg) {
  if (!(cfg.alpha > 0.0)) throw std::invalid_argument("CboConfig: alpha must be > 0");
  if (!(cfg.lambda > 0.0)) throw std::invalid_argument("CboConfig: lambda must be > 0");
  if (!(cfg.sigma >= 0.0)) throw std::invalid_argument("CboConfig: sigma must be >= 0");
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("CboConfig: dt must be > 0");
  if (cfg.n < 1) throw std::invalid_argument("CboConfig: n must be >= 1");
  if (cfg.t_k < 1) throw std::invalid_argument("CboConfig: t_k must be >= 1");
  if (cfg.s_max < 1) throw std::invalid_argument("CboConfig: s_max must be >= 1");
  if (cfg.threads < 1) throw std::invalid_argument("CboConfig: threads must be >= 1");
}

Swarm init_swarm(const Problem& problem, int subproblems, int per_subproblem,
                 Rng& rng) {
  if (subproblems < 1 || per_subproblem < 1) {
    throw std::invalid_argument("init_swarm: need at least one sub-problem and one agent");
  }
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Swarm swarm;
  swarm.subproblems = subproblems;
  swarm.per_subproblem = per_subproblem;
  swarm.agents.reserve(static_cast<std::size_t>(subproblems) * per_subproblem);
  const int d = problem.dim();
  for (int i = 0; i < subproblems; ++i) {
    for (int h = 0; h < per_subproblem; ++h) {
      Vec x(d);
      for (int l = 0; l < d; ++l) x(l) = unif(rng);
      swarm.agents.push_back(std::move(x));
    }
  }
  return swarm;
}

Vec gibbs_mean(const std::vector<Vec>& points, const std::vector<double>& values,
               double alpha) {
  if (points.empty() || points.size() != values.size()) {
    throw std::invalid_argument("gibbs_mean: need matching non-empty points and values");
  }
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("gibbs_mean: alpha must be > 0");
  }
  double vmin = values.front();
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("gibbs_mean: non-finite value");
    }
    vmin = std::min(vmin, v);
  }
  Vec acc = Vec::Zero(points.front().size());
  double total = 0.0;
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const double weight = std::exp(-alpha * (values[idx] - vmin));
    total += weight;
    acc += weight * points[idx];
  }
  return acc / total;  // total >= 1: the minimizing term contributes exp(0)
}

Vec consensus_point(const Problem& problem, const std::vector<Vec>& agents,
                    const Weight& w, const Scalarizer& scalarizer, double alpha) {
  std::vector<double> values;
  values.reserve(agents.size());
  for (const Vec& x : agents) {
    values.push_back(scalarize(scalarizer, problem.evaluate(x), w));
  }
  return gibbs_mean(agents, values, alpha);
}

Swarm cbo_step(Swarm swarm, const std::vector<Vec>& consensus,
               const CboConfig& cfg, Rng& rng) {
  validate(cfg);
  if (static_cast<int>(consensus.size()) != swarm.subproblems) {
    throw std::invalid_argument("cbo_step: consensus count does not match sub-problems");
  }
  const int d = swarm.dim();
  for (const Vec& y : consensus) {
    if (y.size() != d || !y.allFinite()) {
      throw std::invalid_argument("cbo_step: invalid consensus point");
    }
  }

  const int n = swarm.per_subproblem;
  const std::size_t draws =
      static_cast<std::size_t>(swarm.subproblems) * n * static_cast<std::size_t>(d);
  std::vector<double> noise(draws);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (double& z : noise) z = normal(rng);

  const double drift = cfg.lambda * cfg.dt;
  const double diffusion = cfg.sigma * std::sqrt(cfg.dt);
  parallel_for(0, swarm.subproblems, cfg.threads, [&](int i) {
    const Vec& y = consensus[static_cast<std::size_t>(i)];
    for (int h = 0; h < n; ++h) {
      const std::size_t slot = static_cast<std::size_t>(i) * n + h;
      Vec& x = swarm.agents[slot];
      const Vec diff = y - x;
      const double dist = diff.norm();
      const double* z = &noise[slot * static_cast<std::size_t>(d)];
      for (int l = 0; l < d; ++l) {
        x(l) += drift * diff(l) + diffusion * dist * z[l];
        x(l) = std::clamp(x(l), 0.0, 1.0);
      }
    }
  });
  swarm.iteration += 1;
  return swarm;
}

void AuxiliarySolver::advance_between_events(const std::vector<Weight>&,
                                             const std::vector<Weight>&) {}

void AuxiliarySolver::advance_tail(const std::vector<Weight>&,
                                   const std::vector<Weight>&) {}

McboSolver::McboSolver(const Problem& problem, Scalarizer scalarizer,
                       CboConfig cfg, int subproblems, Rng& rng)
    : problem_(&problem),
      scalarizer_(std::move(scalarizer)),
      cfg_(cfg),
      rng_(&rng) {
  validate(cfg_);
  swarm_ = init_swarm(problem, subproblems, cfg_.n, rng);
}

long McboSolver::num_events() const {
  // Events fire at every iteration s with s % t_k == 0 and s < s_max.
  return (cfg_.s_max - 1) / cfg_.t_k + 1;
}

std::vector<Vec> McboSolver::consensus_for(const std::vector<Weight>& weights) {
  const int subproblems = swarm_.subproblems;
  if (static_cast<int>(weights.size()) != subproblems) {
    throw std::invalid_argument("McboSolver: weight count does not match sub-problems");
  }
  const int n = swarm_.per_subproblem;
  std::vector<double> values(static_cast<std::size_t>(subproblems) * n);
  parallel_for(0, subproblems, cfg_.threads, [&](int i) {
    for (int h = 0; h < n; ++h) {
      const std::size_t slot = static_cast<std::size_t>(i) * n + h;
      const Vec fx = problem_->evaluate(swarm_.agents[slot]);
      if (!fx.allFinite()) {
        throw RunAbortError(agent_diagnostic(*problem_, swarm_.iteration, i, h,
                                             swarm_.agents[slot]));
      }
      values[slot] = scalarize(scalarizer_, fx, weights[static_cast<std::size_t>(i)]);
    }
  });

  std::vector<Vec> consensus(static_cast<std::size_t>(subproblems));
  if (!cfg_.shared_consensus) {
    parallel_for(0, subproblems, cfg_.threads, [&](int i) {
      const auto first = swarm_.agents.begin() + static_cast<std::ptrdiff_t>(i) * n;
      const std::vector<Vec> pts(first, first + n);
      const std::vector<double> vals(values.begin() + static_cast<std::ptrdiff_t>(i) * n,
                                     values.begin() + (static_cast<std::ptrdiff_t>(i) + 1) * n);
      consensus[static_cast<std::size_t>(i)] = gibbs_mean(pts, vals, cfg_.alpha);
    });
  } else {
    // Literal cross-swarm sum: one Gibbs mean over all agents, each weighted
    // with its own sub-problem's scalarization. Every sub-problem receives
    // the same consensus point.
    const Vec shared = gibbs_mean(swarm_.agents, values, cfg_.alpha);
    for (Vec& y : consensus) y = shared;
  }
  return consensus;
}

McboSolver::Solution McboSolver::observe(const std::vector<Weight>& weights) {
  auto consensus = consensus_for(weights);
  Solution sol;
  sol.images.reserve(consensus.size());
  for (std::size_t i = 0; i < consensus.size(); ++i) {
    Vec fy = problem_->evaluate(consensus[i]);
    if (!fy.allFinite()) {
      throw RunAbortError(agent_diagnostic(*problem_, swarm_.iteration,
                                           static_cast<int>(i), -1, consensus[i]));
    }
    sol.images.push_back(std::move(fy));
  }
  sol.decisions = std::move(consensus);
  return sol;
}

void McboSolver::run_steps(const std::vector<Weight>& first,
                           const std::vector<Weight>& rest, long count) {
  for (long step = 0; step < count; ++step) {
    const std::vector<Weight>& w = (step == 0) ? first : rest;
    swarm_ = cbo_step(std::move(swarm_), consensus_for(w), cfg_, *rng_);
  }
}

void McboSolver::advance_between_events(const std::vector<Weight>& pre_adapt,
                                        const std::vector<Weight>& post_adapt) {
  run_steps(pre_adapt, post_adapt, cfg_.t_k);
}

void McboSolver::advance_tail(const std::vector<Weight>& pre_adapt,
                              const std::vector<Weight>& post_adapt) {
  run_steps(pre_adapt, post_adapt, cfg_.s_max - (num_events() - 1) * cfg_.t_k);
}

namespace {

constexpr double kWeightFloor = 1e-12;  // stand-in for zero weights (simplex boundary)

double chebyshev_value(const Vec& y, const Weight& w, const Vec& ideal) {
  double best = 0.0;
  for (Eigen::Index l = 0; l < y.size(); ++l) {
    best = std::max(best, w[l] * (y(l) - ideal(l)));
  }
  return best;
}

Vec lame_closed_form(const Problem& problem, const Weight& w) {
  const double g = problem.gamma();
  const int m = problem.num_objectives();
  double acc = 0.0;
  for (int l = 0; l < m; ++l) {
    acc += std::pow(std::max(w[l], kWeightFloor), -g);
  }
  const double t = std::pow(acc, -1.0 / g);
  Vec y(m);
  for (int l = 0; l < m; ++l) {
    y(l) = t / std::max(w[l], kWeightFloor);
  }
  return y;
}

/// Shrinking-window grid minimization of `value` over [lo, hi]^2 (or a 1-D
/// interval when lo.size() == 1). Cells where `value` returns +inf are
/// skipped.
template <typename ValueFn>
Vec refine_minimum(Vec lo, Vec hi, const ValueFn& value, int grid_points) {
  const int dims = static_cast<int>(lo.size());
  Vec best = 0.5 * (lo + hi);
  for (int round = 0; round < 48; ++round) {
    double best_value = std::numeric_limits<double>::infinity();
    Vec best_point = best;
    if (dims == 1) {
      for (int a = 0; a <= grid_points; ++a) {
        Vec u(1);
        u(0) = lo(0) + (hi(0) - lo(0)) * a / grid_points;
        const double v = value(u);
        if (v < best_value) {
          best_value = v;
          best_point = u;
        }
      }
    } else {
      for (int a = 0; a <= grid_points; ++a) {
        for (int b = 0; b <= grid_points; ++b) {
          Vec u(2);
          u(0) = lo(0) + (hi(0) - lo(0)) * a / grid_points;
          u(1) = lo(1) + (hi(1) - lo(1)) * b / grid_points;
          const double v = value(u);
          if (v < best_value) {
            best_value = v;
            best_point = u;
          }
        }
      }
    }
    best = best_point;
    const Vec width = hi - lo;
    if (width.maxCoeff() < 1e-13) break;
    // Zoom to two grid cells on each side of the best point; a one-cell
    // window can exclude a minimizer sitting diagonally across a cell.
    for (int l = 0; l < dims; ++l) {
      const double cell = width(l) / grid_points;
      lo(l) = std::max(lo(l), best(l) - 2.0 * cell);
      hi(l) = std::min(hi(l), best(l) + 2.0 * cell);
    }
  }
  return best;
}

}  // namespace

Vec oracle_solve(const Problem& problem, const Weight& w, const Scalarizer& s) {
  if (!std::isinf(s.p)) {
    throw std::invalid_argument("oracle_solve requires the Chebyshev scalarizer (p = inf)");
  }
  if (s.ideal.size() != problem.num_objectives() || w.dim() != problem.num_objectives()) {
    throw std::invalid_argument("oracle_solve: dimension mismatch");
  }
  if ((s.ideal.array() > 0.0).any()) {
    throw std::invalid_argument("oracle_solve: ideal point must be component-wise <= 0");
  }

  if (problem.family() == Problem::Family::kLame) {
    if ((s.ideal.array() == 0.0).all()) {
      return lame_closed_form(problem, w);
    }
    // General nonpositive ideal: minimize over the angle parametrization.
    const int angles = problem.num_objectives() - 1;
    Vec x_template = Vec::Zero(problem.dim());
    const auto value = [&](const Vec& u) {
      Vec x = x_template;
      for (int l = 0; l < angles; ++l) x(l) = u(l);
      return chebyshev_value(problem.evaluate(x), w, s.ideal);
    };
    const Vec u = refine_minimum(Vec::Zero(angles), Vec::Ones(angles), value,
                                 angles == 1 ? 200 : 48);
    Vec x = x_template;
    for (int l = 0; l < angles; ++l) x(l) = u(l);
    return problem.evaluate(x);
  }

  // Inverted DTLZ1 with ideal = 0: minimizing max_l w_l f_l over the capped
  // triangle {f >= 0, sum f = 1, f <= 0.5} is a water-filling problem. The
  // absorbed budget sum_l min(0.5, t / w_l) grows monotonically in the level
  // t, so the optimal level solves sum_l min(0.5, t / w_l) = 1; every
  // component sits at its cap or at t / w_l.
  if ((s.ideal.array() == 0.0).all()) {
    const int m = problem.num_objectives();
    Vec clamped(m);
    for (int l = 0; l < m; ++l) clamped(l) = std::max(w[l], kWeightFloor);
    const auto absorbed = [&](double t) {
      double total = 0.0;
      for (int l = 0; l < m; ++l) total += std::min(0.5, t / clamped(l));
      return total;
    };
    double lo = 0.0, hi = clamped.maxCoeff();  // absorbed(max w) >= 1
    for (int iter = 0; iter < 200 && absorbed(hi) < 1.0; ++iter) hi *= 2.0;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (absorbed(mid) < 1.0 ? lo : hi) = mid;
    }
    const double level = hi;
    Vec y(m);
    double uncapped_budget = 1.0, uncapped_sum = 0.0;
    for (int l = 0; l < m; ++l) {
      y(l) = std::min(0.5, level / clamped(l));
      if (y(l) >= 0.5) {
        uncapped_budget -= 0.5;
      } else {
        uncapped_sum += y(l);
      }
    }
    // Repair rounding so the components sum to exactly one.
    if (uncapped_sum > 0.0) {
      const double scale = uncapped_budget / uncapped_sum;
      for (int l = 0; l < m; ++l) {
        if (y(l) < 0.5) y(l) = std::clamp(y(l) * scale, 0.0, 0.5);
      }
    }
    return y;
  }

  // General nonpositive ideal: grid refinement over (f_1, f_2) on the capped
  // triangle.
  const auto value = [&](const Vec& u) {
    const double f3 = 1.0 - u(0) - u(1);
    if (f3 < 0.0 || f3 > 0.5) {
      return std::numeric_limits<double>::infinity();
    }
    Vec y(3);
    y << u(0), u(1), f3;
    return chebyshev_value(y, w, s.ideal);
  };
  const Vec u = refine_minimum(Vec::Zero(2), Vec::Constant(2, 0.5), value, 48);
  Vec y(3);
  y << u(0), u(1), std::clamp(1.0 - u(0) - u(1), 0.0, 0.5);
  return y;
}

OracleSolver::OracleSolver(const Problem& problem, Scalarizer scalarizer,
                           long events)
    : problem_(&problem), scalarizer_(std::move(scalarizer)), events_(events) {
  if (events_ < 0) {
    throw std::invalid_argument("OracleSolver: negative event count");
  }
}

OracleSolver::Solution OracleSolver::observe(const std::vector<Weight>& weights) {
  Solution sol;
  sol.decisions.reserve(weights.size());
  sol.images.reserve(weights.size());
  for (const Weight& w : weights) {
    Vec y = oracle_solve(*problem_, w, scalarizer_);
    sol.decisions.push_back(problem_->decision_from_front(y));
    sol.images.push_back(std::move(y));
  }
  return sol;
}

SolveResult run_adaptive(AuxiliarySolver& solver, WeightEnsemble ensemble,
                         const AdaptConfig& adapt_cfg, long adapt_cap, Rng& rng) {
  if (adapt_cap < 0) {
    throw std::invalid_argument("run_adaptive: adapt_cap must be >= 0");
  }
  const long events = solver.num_events();
  SolveResult out;
  out.samples.reserve(static_cast<std::size_t>(events) + 1);

  for (long j = 0; j < events; ++j) {
    auto sol = solver.observe(ensemble.weights);
    out.samples.push_back({j, ensemble.weights, sol.images});
    WeightEnsemble next = (j < adapt_cap)
                              ? adapt_step(ensemble, sol.images, adapt_cfg, rng)
                              : WeightEnsemble(ensemble.weights, ensemble.step);
    if (j + 1 < events) {
      solver.advance_between_events(ensemble.weights, next.weights);
    } else {
      solver.advance_tail(ensemble.weights, next.weights);
    }
    ensemble = std::move(next);
  }

  auto final_sol = solver.observe(ensemble.weights);
  out.samples.push_back({events, ensemble.weights, final_sol.images});
  out.final_weights = ensemble;
  out.final_decisions = std::move(final_sol.decisions);
  out.final_images = std::move(final_sol.images);
  return out;
}

SolveResult solve_mcbo(const Problem& problem, const WeightEnsemble& initial,
                       const Scalarizer& scalarizer, const CboConfig& cbo_cfg,
                       const AdaptConfig& adapt_cfg, long adapt_cap, Rng& rng) {
  McboSolver solver(problem, scalarizer, cbo_cfg, initial.size(), rng);
  return run_adaptive(solver, initial, adapt_cfg, adapt_cap, rng);
}

SolveResult solve_with_oracle(const Problem& problem,
                              const WeightEnsemble& initial,
                              const Scalarizer& scalarizer,
                              const AdaptConfig& adapt_cfg, long adapt_steps,
                              Rng& rng) {
  OracleSolver solver(problem, scalarizer, adapt_steps);
  return run_adaptive(solver, initial, adapt_cfg, adapt_steps, rng);
}

}  // namespace mowa
