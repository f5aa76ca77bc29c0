#pragma once

#include <vector>

#include "mowa/adapt.hpp"
#include "mowa/problems.hpp"
#include "mowa/scalarize.hpp"
#include "mowa/simplex.hpp"

namespace mowa {

/// Consensus-based optimization parameters for the multi-swarm solver.
struct CboConfig {
  double alpha = 1e5;   // Gibbs weight sharpness
  double lambda = 1.0;  // drift rate
  double sigma = 1.0;   // noise strength
  double dt = 1e-2;     // time step
  int n = 20;           // agents per sub-problem
  int t_k = 50;         // solver iterations between weight adaptations
  long s_max = 200 * 50;
  bool shared_consensus = false;  // literal cross-swarm Gibbs sum (comparison mode)
  int threads = 1;
};

void validate(const CboConfig& cfg);

/// Agent positions for all sub-problems, stored row-per-agent with index
/// i * n + h for sub-problem i and agent h.
struct Swarm {
  std::vector<Vec> agents;
  int subproblems = 0;
  int per_subproblem = 0;
  long iteration = 0;

  int dim() const { return agents.empty() ? 0 : static_cast<int>(agents.front().size()); }
  const Vec& at(int i, int h) const {
    return agents[static_cast<std::size_t>(i) * per_subproblem + h];
  }
};

/// N * n agents drawn i.i.d. uniform from the box, in (i, h, dim) order.
Swarm init_swarm(const Problem& problem, int subproblems, int per_subproblem,
                 Rng& rng);

/// Gibbs-weighted mean exp(-alpha v_i) of the given points, stabilized by
/// subtracting the minimum value before exponentiating so that large alpha
/// cannot underflow every term. Lies in the convex hull of the points.
Vec gibbs_mean(const std::vector<Vec>& points, const std::vector<double>& values,
               double alpha);

/// Consensus point of one sub-problem from its own n agents.
Vec consensus_point(const Problem& problem, const std::vector<Vec>& agents,
                    const Weight& w, const Scalarizer& scalarizer, double alpha);

/// One solver iteration: drift lambda*dt toward the sub-problem's consensus,
/// isotropic noise scaled by sigma*sqrt(dt)*|Y - X|, then a component-wise
/// clamp to the box. Noise is pre-drawn in (i, h, dim) order, so the result
/// is identical for any thread count.
Swarm cbo_step(Swarm swarm, const std::vector<Vec>& consensus,
               const CboConfig& cfg, Rng& rng);

/// Behavioral contract of the auxiliary solver: map the current weights to
/// approximate minimizers of their scalarized sub-problems and the images of
/// those minimizers. Implementations may keep internal state that improves
/// between adaptation events.
class AuxiliarySolver {
 public:
  struct Solution {
    std::vector<Vec> decisions;
    std::vector<Vec> images;
  };

  virtual ~AuxiliarySolver() = default;

  /// Solution for the given weights at the current internal state. Must not
  /// advance the state.
  virtual Solution observe(const std::vector<Weight>& weights) = 0;

  /// Number of adaptation events the solver supports in one run.
  virtual long num_events() const = 0;

  /// Advance the internal state from one adaptation event to the next.
  /// `pre_adapt` are the weights in effect when the event fired (the first
  /// internal step still uses their consensus), `post_adapt` the updated ones.
  virtual void advance_between_events(const std::vector<Weight>& pre_adapt,
                                      const std::vector<Weight>& post_adapt);

  /// Advance past the last event to the end of the run.
  virtual void advance_tail(const std::vector<Weight>& pre_adapt,
                            const std::vector<Weight>& post_adapt);
};

/// Multi-swarm CBO: one sub-swarm of n agents per weight vector, consensus
/// computed from Gibbs weights of the scalarized objective values.
class McboSolver : public AuxiliarySolver {
 public:
  McboSolver(const Problem& problem, Scalarizer scalarizer, CboConfig cfg,
             int subproblems, Rng& rng);

  Solution observe(const std::vector<Weight>& weights) override;
  long num_events() const override;
  void advance_between_events(const std::vector<Weight>& pre_adapt,
                              const std::vector<Weight>& post_adapt) override;
  void advance_tail(const std::vector<Weight>& pre_adapt,
                    const std::vector<Weight>& post_adapt) override;

  const Swarm& swarm() const { return swarm_; }

 private:
  std::vector<Vec> consensus_for(const std::vector<Weight>& weights);
  void run_steps(const std::vector<Weight>& first,
                 const std::vector<Weight>& rest, long count);

  const Problem* problem_;
  Scalarizer scalarizer_;
  CboConfig cfg_;
  Swarm swarm_;
  Rng* rng_;
};

/// Exact Chebyshev minimizer over the analytic front. Requires p = infinity
/// and a nonpositive ideal point. For Lame problems with ideal = 0 the
/// minimizer is closed-form (equal weighted deviations); otherwise a dense
/// grid over the front parametrization is refined locally.
Vec oracle_solve(const Problem& problem, const Weight& w, const Scalarizer& s);

/// Auxiliary solver backed by oracle_solve; isolates the weight dynamics from
/// solver noise.
class OracleSolver : public AuxiliarySolver {
 public:
  OracleSolver(const Problem& problem, Scalarizer scalarizer, long events);

  Solution observe(const std::vector<Weight>& weights) override;
  long num_events() const override { return events_; }

 private:
  const Problem* problem_;
  Scalarizer scalarizer_;
  long events_;
};

/// One recorded adaptation event: the weights in effect and the sub-problem
/// images before the update was applied.
struct TrajectorySample {
  long k = 0;
  std::vector<Weight> weights;
  std::vector<Vec> images;
};

struct SolveResult {
  std::vector<TrajectorySample> samples;  // k = 0 .. num_events
  WeightEnsemble final_weights;
  std::vector<Vec> final_decisions;
  std::vector<Vec> final_images;
};

/// Generic adaptation loop: observe - record - adapt - advance, repeated for
/// solver.num_events() events (adaptation applies only while the event index
/// is below adapt_cap), followed by one final recorded observation.
SolveResult run_adaptive(AuxiliarySolver& solver, WeightEnsemble ensemble,
                         const AdaptConfig& adapt_cfg, long adapt_cap, Rng& rng);

/// Full multi-swarm run: s_max solver iterations with a weight adaptation
/// every t_k of them, k = s_max / t_k adaptations total for divisible s_max.
SolveResult solve_mcbo(const Problem& problem, const WeightEnsemble& initial,
                       const Scalarizer& scalarizer, const CboConfig& cbo_cfg,
                       const AdaptConfig& adapt_cfg, long adapt_cap, Rng& rng);

/// Adaptation driven by the analytic oracle instead of CBO.
SolveResult solve_with_oracle(const Problem& problem,
                              const WeightEnsemble& initial,
                              const Scalarizer& scalarizer,
                              const AdaptConfig& adapt_cfg, long adapt_steps,
                              Rng& rng);

}  // namespace mowa
