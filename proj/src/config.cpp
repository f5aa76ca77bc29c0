#include "mowa/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

#include "mowa/problems.hpp"

namespace mowa {

namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  if (value == "inf" || value == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  try {
    std::size_t consumed = 0;
    const double parsed = std::stod(value, &consumed);
    if (consumed == value.size()) return parsed;
  } catch (const std::exception&) {
  }
  throw ConfigError("config key '" + key + "': expected a real number, got '" +
                    value + "'");
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t consumed = 0;
    const long parsed = std::stol(value, &consumed);
    if (consumed == value.size()) return parsed;
  } catch (const std::exception&) {
  }
  throw ConfigError("config key '" + key + "': expected an integer, got '" +
                    value + "'");
}

int parse_int(const std::string& key, const std::string& value) {
  const long parsed = parse_long(key, value);
  if (parsed < std::numeric_limits<int>::min() ||
      parsed > std::numeric_limits<int>::max()) {
    throw ConfigError("config key '" + key + "': value out of range");
  }
  return static_cast<int>(parsed);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t consumed = 0;
    const std::uint64_t parsed = std::stoull(value, &consumed);
    if (consumed == value.size() && value.find('-') == std::string::npos) {
      return parsed;
    }
  } catch (const std::exception&) {
  }
  throw ConfigError("config key '" + key +
                    "': expected an unsigned 64-bit integer, got '" + value + "'");
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw ConfigError("config key '" + key + "': expected true or false, got '" +
                    value + "'");
}

std::string format_p(double p) {
  return std::isinf(p) ? "inf" : format_double(p);
}

struct KeySpec {
  const char* key;
  const char* comment;
  std::string (*emit)(const ExperimentConfig&);
  void (*apply)(ExperimentConfig&, const std::string&);
};

const std::vector<KeySpec>& key_table() {
  static const std::vector<KeySpec> table = {
      {"problem", "benchmark id: lame{m}_g{gamma} with m in {2,3}, or idtlz1_3",
       [](const ExperimentConfig& c) { return c.problem_id; },
       [](ExperimentConfig& c, const std::string& v) { c.problem_id = v; }},
      {"dynamics", "weight adaptation: fixed | grad-image | pairwise | pairwise-noise",
       [](const ExperimentConfig& c) { return std::string(to_string(c.dynamics)); },
       [](ExperimentConfig& c, const std::string& v) { c.dynamics = dynamics_from_string(v); }},
      {"potential", "interaction kernel: morse | riesz",
       [](const ExperimentConfig& c) { return std::string(to_string(c.potential_kind)); },
       [](ExperimentConfig& c, const std::string& v) { c.potential_kind = potential_kind_from_string(v); }},
      {"potential_param", "kernel parameter: C for morse, s for riesz",
       [](const ExperimentConfig& c) { return format_double(c.potential_param); },
       [](ExperimentConfig& c, const std::string& v) { c.potential_param = parse_double("potential_param", v); }},
      {"p", "scalarization exponent in [1, inf]; inf selects Chebyshev",
       [](const ExperimentConfig& c) { return format_p(c.p); },
       [](ExperimentConfig& c, const std::string& v) { c.p = parse_double("p", v); }},
      {"ideal_offset", "utopian offset: the ideal point is -offset in every objective",
       [](const ExperimentConfig& c) { return format_double(c.ideal_offset); },
       [](ExperimentConfig& c, const std::string& v) { c.ideal_offset = parse_double("ideal_offset", v); }},
      {"init", "initial weights: lattice | random",
       [](const ExperimentConfig& c) { return std::string(to_string(c.init)); },
       [](ExperimentConfig& c, const std::string& v) { c.init = weight_init_from_string(v); }},
      {"lattice_h", "lattice resolution; N = C(h+m-1, m-1) weights",
       [](const ExperimentConfig& c) { return std::to_string(c.lattice_h); },
       [](ExperimentConfig& c, const std::string& v) { c.lattice_h = parse_int("lattice_h", v); }},
      {"n_weights", "number of weights when init = random",
       [](const ExperimentConfig& c) { return std::to_string(c.n_weights); },
       [](ExperimentConfig& c, const std::string& v) { c.n_weights = parse_int("n_weights", v); }},
      {"tau", "adaptation step length",
       [](const ExperimentConfig& c) { return format_double(c.tau); },
       [](ExperimentConfig& c, const std::string& v) { c.tau = parse_double("tau", v); }},
      {"zeta", "adaptation noise scale (pairwise-noise)",
       [](const ExperimentConfig& c) { return format_double(c.zeta); },
       [](ExperimentConfig& c, const std::string& v) { c.zeta = parse_double("zeta", v); }},
      {"alpha", "CBO Gibbs weight sharpness",
       [](const ExperimentConfig& c) { return format_double(c.alpha); },
       [](ExperimentConfig& c, const std::string& v) { c.alpha = parse_double("alpha", v); }},
      {"lambda", "CBO drift rate",
       [](const ExperimentConfig& c) { return format_double(c.lambda); },
       [](ExperimentConfig& c, const std::string& v) { c.lambda = parse_double("lambda", v); }},
      {"sigma", "CBO noise strength",
       [](const ExperimentConfig& c) { return format_double(c.sigma); },
       [](ExperimentConfig& c, const std::string& v) { c.sigma = parse_double("sigma", v); }},
      {"dt", "CBO time step",
       [](const ExperimentConfig& c) { return format_double(c.dt); },
       [](ExperimentConfig& c, const std::string& v) { c.dt = parse_double("dt", v); }},
      {"n_agents", "CBO agents per sub-problem",
       [](const ExperimentConfig& c) { return std::to_string(c.n_agents); },
       [](ExperimentConfig& c, const std::string& v) { c.n_agents = parse_int("n_agents", v); }},
      {"t_k", "CBO iterations between weight adaptations",
       [](const ExperimentConfig& c) { return std::to_string(c.t_k); },
       [](ExperimentConfig& c, const std::string& v) { c.t_k = parse_int("t_k", v); }},
      {"s_max", "total CBO iterations",
       [](const ExperimentConfig& c) { return std::to_string(c.s_max); },
       [](ExperimentConfig& c, const std::string& v) { c.s_max = parse_long("s_max", v); }},
      {"adapt_steps", "maximum number of weight adaptations",
       [](const ExperimentConfig& c) { return std::to_string(c.adapt_steps); },
       [](ExperimentConfig& c, const std::string& v) { c.adapt_steps = parse_long("adapt_steps", v); }},
      {"oracle_solver", "replace CBO with the analytic front oracle (true | false)",
       [](const ExperimentConfig& c) { return std::string(c.oracle_solver ? "true" : "false"); },
       [](ExperimentConfig& c, const std::string& v) { c.oracle_solver = parse_bool("oracle_solver", v); }},
      {"shared_consensus", "single cross-swarm consensus point (comparison mode)",
       [](const ExperimentConfig& c) { return std::string(c.shared_consensus ? "true" : "false"); },
       [](ExperimentConfig& c, const std::string& v) { c.shared_consensus = parse_bool("shared_consensus", v); }},
      {"threads", "worker threads; results are identical for any value",
       [](const ExperimentConfig& c) { return std::to_string(c.threads); },
       [](ExperimentConfig& c, const std::string& v) { c.threads = parse_int("threads", v); }},
      {"seed", "base random seed (unsigned 64-bit)",
       [](const ExperimentConfig& c) { return std::to_string(c.seed); },
       [](ExperimentConfig& c, const std::string& v) { c.seed = parse_u64("seed", v); }},
      {"out_dir", "output directory",
       [](const ExperimentConfig& c) { return c.out_dir; },
       [](ExperimentConfig& c, const std::string& v) { c.out_dir = v; }},
      {"repeats", "independent runs with seeds seed+0 .. seed+repeats-1",
       [](const ExperimentConfig& c) { return std::to_string(c.repeats); },
       [](ExperimentConfig& c, const std::string& v) { c.repeats = parse_int("repeats", v); }},
  };
  return table;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* to_string(Dynamics d) {
  switch (d) {
    case Dynamics::kFixed: return "fixed";
    case Dynamics::kGradImage: return "grad-image";
    case Dynamics::kPairwise: return "pairwise";
    case Dynamics::kPairwiseNoise: return "pairwise-noise";
  }
  return "?";
}

std::string dynamics_choices() {
  return "fixed, grad-image, pairwise, pairwise-noise";
}

Dynamics dynamics_from_string(const std::string& name) {
  if (name == "fixed") return Dynamics::kFixed;
  if (name == "grad-image") return Dynamics::kGradImage;
  if (name == "pairwise") return Dynamics::kPairwise;
  if (name == "pairwise-noise") return Dynamics::kPairwiseNoise;
  throw ConfigError("unknown dynamics '" + name + "' (valid values: " +
                    dynamics_choices() + ")");
}

const char* to_string(Potential::Kind k) {
  return k == Potential::Kind::kMorse ? "morse" : "riesz";
}

Potential::Kind potential_kind_from_string(const std::string& name) {
  if (name == "morse") return Potential::Kind::kMorse;
  if (name == "riesz") return Potential::Kind::kRiesz;
  throw ConfigError("unknown potential '" + name + "' (valid values: morse, riesz)");
}

const char* to_string(WeightInit init) {
  return init == WeightInit::kLattice ? "lattice" : "random";
}

WeightInit weight_init_from_string(const std::string& name) {
  if (name == "lattice") return WeightInit::kLattice;
  if (name == "random") return WeightInit::kRandom;
  throw ConfigError("unknown init '" + name + "' (valid values: lattice, random)");
}

ExperimentConfig default_config(const std::string& problem_id) {
  const Problem problem = Problem::from_id(problem_id);
  ExperimentConfig cfg;
  cfg.problem_id = problem.id();
  if (problem.num_objectives() == 2) {
    cfg.lattice_h = 14;  // 15 weights
    cfg.n_weights = 15;
    cfg.zeta = 1e-9;
  } else {
    cfg.lattice_h = 10;  // 66 weights
    cfg.n_weights = 66;
    cfg.zeta = 1e-6;
  }
  if (const char* out = std::getenv("MOWA_OUT_DIR"); out != nullptr && *out != '\0') {
    cfg.out_dir = out;
  }
  return cfg;
}

void validate_config(const ExperimentConfig& cfg) {
  const Problem problem = Problem::from_id(cfg.problem_id);  // throws for bad ids
  if (cfg.dynamics == Dynamics::kGradImage && problem.num_objectives() != 2) {
    throw ConfigError("config key 'dynamics': grad-image requires a problem with m = 2 "
                      "objectives, but '" + cfg.problem_id + "' has m = " +
                      std::to_string(problem.num_objectives()));
  }
  if (!(cfg.potential_param > 0.0)) throw ConfigError("config key 'potential_param': must be > 0");
  if (!(cfg.p >= 1.0)) throw ConfigError("config key 'p': must be >= 1 (or inf)");
  if (!(cfg.ideal_offset >= 0.0)) throw ConfigError("config key 'ideal_offset': must be >= 0");
  if (cfg.lattice_h < 1) throw ConfigError("config key 'lattice_h': must be >= 1");
  if (cfg.n_weights < 1) throw ConfigError("config key 'n_weights': must be >= 1");
  if (!(cfg.tau > 0.0)) throw ConfigError("config key 'tau': must be > 0");
  if (!(cfg.zeta >= 0.0)) throw ConfigError("config key 'zeta': must be >= 0");
  if (cfg.dynamics == Dynamics::kPairwiseNoise && !(cfg.zeta > 0.0)) {
    throw ConfigError("config key 'zeta': pairwise-noise dynamics requires zeta > 0");
  }
  if (!(cfg.alpha > 0.0)) throw ConfigError("config key 'alpha': must be > 0");
  if (!(cfg.lambda > 0.0)) throw ConfigError("config key 'lambda': must be > 0");
  if (!(cfg.sigma >= 0.0)) throw ConfigError("config key 'sigma': must be >= 0");
  if (!(cfg.dt > 0.0)) throw ConfigError("config key 'dt': must be > 0");
  if (cfg.n_agents < 1) throw ConfigError("config key 'n_agents': must be >= 1");
  if (cfg.t_k < 1) throw ConfigError("config key 't_k': must be >= 1");
  if (cfg.s_max < 1) throw ConfigError("config key 's_max': must be >= 1");
  if (cfg.adapt_steps < 0) throw ConfigError("config key 'adapt_steps': must be >= 0");
  if (cfg.oracle_solver && !std::isinf(cfg.p)) {
    throw ConfigError("config key 'oracle_solver': the analytic oracle requires p = inf");
  }
  if (cfg.threads < 1) throw ConfigError("config key 'threads': must be >= 1");
  if (cfg.out_dir.empty()) throw ConfigError("config key 'out_dir': must not be empty");
  if (cfg.repeats < 1) throw ConfigError("config key 'repeats': must be >= 1");
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  for (const KeySpec& spec : key_table()) {
    out << spec.key << " = " << spec.emit(cfg) << "\n";
  }
  return out.str();
}

ExperimentConfig parse_config(const std::string& text) {
  std::map<std::string, const KeySpec*> by_key;
  for (const KeySpec& spec : key_table()) by_key[spec.key] = &spec;

  ExperimentConfig cfg;
  std::map<std::string, bool> seen;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected 'key = value', got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    const auto it = by_key.find(key);
    if (it == by_key.end()) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    }
    if (seen.count(key) != 0) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": duplicate key '" + key + "'");
    }
    it->second->apply(cfg, value);
    seen[key] = true;
  }

  std::string missing;
  for (const KeySpec& spec : key_table()) {
    if (seen.count(spec.key) == 0) {
      if (!missing.empty()) missing += ", ";
      missing += spec.key;
    }
  }
  if (!missing.empty()) {
    throw ConfigError("config: missing mandatory keys: " + missing);
  }
  return cfg;
}

std::vector<std::pair<std::string, std::string>> config_items(const ExperimentConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> items;
  items.reserve(key_table().size());
  for (const KeySpec& spec : key_table()) {
    items.emplace_back(spec.key, spec.emit(cfg));
  }
  return items;
}

ExperimentConfig config_from_items(
    const std::vector<std::pair<std::string, std::string>>& items) {
  std::ostringstream flat;
  for (const auto& [key, value] : items) {
    flat << key << " = " << value << "\n";
  }
  return parse_config(flat.str());
}

std::string config_template(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "# mowa experiment configuration\n";
  for (const KeySpec& spec : key_table()) {
    out << "\n# " << spec.comment << "\n";
    out << spec.key << " = " << spec.emit(cfg) << "\n";
  }
  return out.str();
}

}  // namespace mowa
