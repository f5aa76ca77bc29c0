#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mowa/adapt.hpp"
#include "mowa/potential.hpp"

namespace mowa {

enum class WeightInit { kLattice, kRandom };

/// Complete description of one experiment. Defaults follow the reference
/// parameter set of the multi-swarm solver (alpha = 1e5, lambda = 1,
/// sigma = 1, dt = 1e-2, n = 20, t_k = 50, s_max = 200 * t_k, tau = 1e-2,
/// Morse C = 30); zeta and the lattice resolution depend on the number of
/// objectives, see default_config().
struct ExperimentConfig {
  std::string problem_id = "lame2_g0.25";
  Dynamics dynamics = Dynamics::kPairwiseNoise;
  Potential::Kind potential_kind = Potential::Kind::kMorse;
  double potential_param = 30.0;
  double p = std::numeric_limits<double>::infinity();
  double ideal_offset = 0.0;
  WeightInit init = WeightInit::kLattice;
  int lattice_h = 14;
  int n_weights = 15;  // used when init = random
  double tau = 1e-2;
  double zeta = 1e-9;
  double alpha = 1e5;
  double lambda = 1.0;
  double sigma = 1.0;
  double dt = 1e-2;
  int n_agents = 20;
  int t_k = 50;
  long s_max = 10000;
  long adapt_steps = 200;
  bool oracle_solver = false;
  bool shared_consensus = false;
  int threads = 1;
  std::uint64_t seed = 42;
  std::string out_dir = "out";
  int repeats = 1;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Defaults adjusted to the given problem (lattice resolution 14 for two
/// objectives, 10 for three; zeta 1e-9 / 1e-6). The output directory falls
/// back to the MOWA_OUT_DIR environment variable when set.
ExperimentConfig default_config(const std::string& problem_id);

/// Throws ConfigError naming the offending field.
void validate_config(const ExperimentConfig& cfg);

/// Canonical flat key = value form; parse(serialize(c)) == c and the
/// serialization of a parsed document is a fixed point.
std::string serialize_config(const ExperimentConfig& cfg);

/// Parses the flat format. '#' starts a comment; every key is mandatory.
/// Errors name the field and the offending value.
ExperimentConfig parse_config(const std::string& text);

/// Serialized config with a comment block above every key.
std::string config_template(const ExperimentConfig& cfg);

const char* to_string(Dynamics d);
Dynamics dynamics_from_string(const std::string& name);
const char* to_string(Potential::Kind k);
Potential::Kind potential_kind_from_string(const std::string& name);
const char* to_string(WeightInit init);
WeightInit weight_init_from_string(const std::string& name);

/// All dynamics names, for usage messages.
std::string dynamics_choices();

/// Key/value pairs in canonical order, with the same textual values as the
/// flat format (used to embed the config in run.json).
std::vector<std::pair<std::string, std::string>> config_items(const ExperimentConfig& cfg);

/// Inverse of config_items; every key is mandatory.
ExperimentConfig config_from_items(
    const std::vector<std::pair<std::string, std::string>>& items);

/// 17-significant-digit representation that round-trips doubles exactly.
std::string format_double(double v);

}  // namespace mowa
