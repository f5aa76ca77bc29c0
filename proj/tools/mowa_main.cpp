#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mowa/config.hpp"
#include "mowa/io.hpp"
#include "mowa/metrics.hpp"
#include "mowa/run.hpp"
#include "mowa/svg.hpp"

namespace fs = std::filesystem;

namespace {

struct RunFlags {
  std::optional<std::string> config_path;
  std::optional<std::string> problem;
  std::optional<std::string> dynamics;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<int> repeats;
  std::optional<long> s_max;
  std::optional<long> adapt_steps;
  std::optional<int> threads;
  std::optional<double> tau;
  std::optional<double> zeta;
  bool oracle_solver = false;
  bool shared_consensus = false;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw mowa::ConfigError("cannot open config file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void add_run_flags(CLI::App* cmd, RunFlags& flags, bool with_config) {
  if (with_config) {
    cmd->add_option("--config", flags.config_path, "experiment configuration file");
  }
  cmd->add_option("--problem", flags.problem,
                  "problem id (lame{m}_g{gamma} or idtlz1_3)");
  cmd->add_option("--dynamics", flags.dynamics, "weight adaptation dynamics")
      ->check(CLI::IsMember({"fixed", "grad-image", "pairwise", "pairwise-noise"}));
  cmd->add_option("--seed", flags.seed, "base random seed");
  cmd->add_option("--out", flags.out_dir, "output directory");
  cmd->add_option("--repeats", flags.repeats, "independent runs (seeds seed+0..)");
  cmd->add_option("--s-max", flags.s_max, "total CBO iterations");
  cmd->add_option("--adapt-steps", flags.adapt_steps, "maximum weight adaptations");
  cmd->add_option("--threads", flags.threads, "worker threads");
  cmd->add_option("--tau", flags.tau, "adaptation step length");
  cmd->add_option("--zeta", flags.zeta, "adaptation noise scale");
  cmd->add_flag("--oracle-solver", flags.oracle_solver,
                "replace CBO with the analytic front oracle");
  cmd->add_flag("--shared-consensus", flags.shared_consensus,
                "literal cross-swarm consensus (comparison mode)");
}

mowa::ExperimentConfig build_config(const RunFlags& flags) {
  mowa::ExperimentConfig cfg;
  if (flags.config_path) {
    cfg = mowa::parse_config(read_file(*flags.config_path));
    if (flags.problem) cfg.problem_id = *flags.problem;
  } else if (flags.problem) {
    cfg = mowa::default_config(*flags.problem);
  } else {
    throw mowa::ConfigError("either --config or --problem is required");
  }
  if (flags.dynamics) cfg.dynamics = mowa::dynamics_from_string(*flags.dynamics);
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.out_dir) cfg.out_dir = *flags.out_dir;
  if (flags.repeats) cfg.repeats = *flags.repeats;
  if (flags.s_max) cfg.s_max = *flags.s_max;
  if (flags.adapt_steps) cfg.adapt_steps = *flags.adapt_steps;
  if (flags.threads) cfg.threads = *flags.threads;
  if (flags.tau) cfg.tau = *flags.tau;
  if (flags.zeta) cfg.zeta = *flags.zeta;
  if (flags.oracle_solver) cfg.oracle_solver = true;
  if (flags.shared_consensus) cfg.shared_consensus = true;
  mowa::validate_config(cfg);
  return cfg;
}

void print_run_summary(const mowa::RunRecord& record, const fs::path& dir) {
  const auto& last = record.steps.back();
  std::cout << "run: problem=" << record.config.problem_id
            << " dynamics=" << mowa::to_string(record.config.dynamics)
            << " seed=" << record.config.seed << " k=" << last.k
            << " energy=" << last.energy << " igd=" << last.igd << " ("
            << record.duration_seconds << " s) -> " << dir.string() << "\n";
}

int command_run(const RunFlags& flags) {
  const mowa::ExperimentConfig cfg = build_config(flags);
  const auto records = mowa::run_repeats(cfg);
  for (std::size_t r = 0; r < records.size(); ++r) {
    fs::path dir = cfg.out_dir;
    if (records.size() > 1) {
      char sub[16];
      std::snprintf(sub, sizeof sub, "run_%03zu", r);
      dir /= sub;
    }
    mowa::emit_outputs(records[r], dir);
    mowa::plot_svg(records[r], dir);
    print_run_summary(records[r], dir);
  }
  return 0;
}

int command_compare(const RunFlags& flags) {
  if (!flags.problem) {
    throw mowa::ConfigError("compare requires --problem");
  }
  mowa::ExperimentConfig base = build_config(flags);
  if (!flags.repeats) base.repeats = 5;

  const mowa::Dynamics all[] = {
      mowa::Dynamics::kFixed, mowa::Dynamics::kGradImage,
      mowa::Dynamics::kPairwise, mowa::Dynamics::kPairwiseNoise};
  std::vector<mowa::Dynamics> rows;
  if (flags.dynamics) {
    rows = {mowa::Dynamics::kFixed, mowa::dynamics_from_string(*flags.dynamics)};
  } else {
    rows.assign(std::begin(all), std::end(all));
  }

  const mowa::Problem problem = mowa::Problem::from_id(base.problem_id);
  std::cout << "problem: " << base.problem_id << "  repeats: " << base.repeats
            << "  seeds: " << base.seed << ".."
            << base.seed + static_cast<std::uint64_t>(base.repeats - 1) << "\n";
  std::printf("%-16s %-20s %-20s\n", "dynamics", "final_energy(med)", "final_igd(med)");
  for (mowa::Dynamics d : rows) {
    if (d == mowa::Dynamics::kGradImage && problem.num_objectives() != 2) {
      std::printf("%-16s %-20s %-20s\n", mowa::to_string(d), "n/a (needs m=2)",
                  "n/a (needs m=2)");
      continue;
    }
    mowa::ExperimentConfig cfg = base;
    cfg.dynamics = d;
    if (d != mowa::Dynamics::kPairwiseNoise) cfg.zeta = base.zeta;
    mowa::validate_config(cfg);
    const auto records = mowa::run_repeats(cfg);
    std::vector<double> energies, igds;
    for (std::size_t r = 0; r < records.size(); ++r) {
      energies.push_back(records[r].steps.back().energy);
      igds.push_back(records[r].steps.back().igd);
      char sub[16];
      std::snprintf(sub, sizeof sub, "run_%03zu", r);
      mowa::emit_outputs(records[r],
                         fs::path(cfg.out_dir) / "compare" / mowa::to_string(d) / sub);
    }
    std::printf("%-16s %-20.8g %-20.8g\n", mowa::to_string(d),
                mowa::median(energies), mowa::median(igds));
  }
  return 0;
}

int command_plot(const std::string& in_dir, const std::optional<std::string>& out_dir) {
  const mowa::RunRecord record = mowa::load_record(in_dir);
  const fs::path target = out_dir ? fs::path(*out_dir) : fs::path(in_dir);
  mowa::plot_svg(record, target);
  std::cout << "plots written to " << target.string() << "\n";
  return 0;
}

int command_init_config(const std::string& problem,
                        const std::optional<std::string>& out_path) {
  const std::string text = mowa::config_template(mowa::default_config(problem));
  if (!out_path) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(*out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + *out_path + "' for writing");
  }
  out << text;
  std::cout << "template written to " << *out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pareto front approximation by adaptive selection of scalarized sub-problems"};
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand("run", "run one experiment");
  add_run_flags(run_cmd, run_flags, /*with_config=*/true);

  RunFlags compare_flags;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "run several dynamics on the same seeds and print medians");
  add_run_flags(compare_cmd, compare_flags, /*with_config=*/false);

  std::string plot_in;
  std::optional<std::string> plot_out;
  CLI::App* plot_cmd = app.add_subcommand("plot", "re-render SVG plots from a run directory");
  plot_cmd->add_option("--in", plot_in, "directory with run.json/front.csv/metrics.csv")
      ->required();
  plot_cmd->add_option("--out", plot_out, "target directory (defaults to --in)");

  std::string init_problem;
  std::optional<std::string> init_out;
  CLI::App* init_cmd = app.add_subcommand("init-config", "emit a commented config template");
  init_cmd->add_option("--problem", init_problem, "problem id")->required();
  init_cmd->add_option("--out", init_out, "target file (defaults to stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed()) return command_run(run_flags);
    if (compare_cmd->parsed()) return command_compare(compare_flags);
    if (plot_cmd->parsed()) return command_plot(plot_in, plot_out);
    if (init_cmd->parsed()) return command_init_config(init_problem, init_out);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const mowa::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 2;
  }
}
