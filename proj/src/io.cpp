#include "mowa/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace mowa {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed for '" + path.string() + "'");
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  return fields;
}

double parse_csv_double(const std::string& text, const fs::path& path) {
  try {
    std::size_t consumed = 0;
    const double v = std::stod(text, &consumed);
    if (consumed == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::runtime_error("malformed number '" + text + "' in '" + path.string() + "'");
}

std::string front_csv(const RunRecord& record) {
  const int m = static_cast<int>(record.final_front.front().size());
  const int d = static_cast<int>(record.final_decisions.front().size());
  std::ostringstream out;
  out << "i";
  for (int l = 1; l <= m; ++l) out << ",w_" << l;
  for (int l = 1; l <= m; ++l) out << ",f_" << l;
  for (int l = 1; l <= d; ++l) out << ",x_" << l;
  out << "\n";
  for (std::size_t i = 0; i < record.final_front.size(); ++i) {
    out << (i + 1);
    for (int l = 0; l < m; ++l) out << "," << format_double(record.final_weights[i][l]);
    for (int l = 0; l < m; ++l) out << "," << format_double(record.final_front[i](l));
    for (int l = 0; l < d; ++l) out << "," << format_double(record.final_decisions[i](l));
    out << "\n";
  }
  return out.str();
}

std::string metrics_csv(const RunRecord& record) {
  std::ostringstream out;
  out << "k,energy,igd\n";
  for (const StepSample& step : record.steps) {
    out << step.k << "," << format_double(step.energy) << ","
        << format_double(step.igd) << "\n";
  }
  return out.str();
}

std::string run_json(const RunRecord& record) {
  ordered_json doc;
  doc["tool"] = {{"name", "mowa"}, {"version", "0.1.0"}};
  ordered_json config = ordered_json::object();
  for (const auto& [key, value] : config_items(record.config)) {
    config[key] = value;
  }
  doc["config"] = std::move(config);
  doc["seed"] = record.config.seed;
  doc["reference"] = {{"seed", record.reference_seed},
                      {"count", record.reference_points}};
  doc["summary"] = {
      {"k_final", record.steps.empty() ? 0 : record.steps.back().k},
      {"metric_samples", record.steps.size()},
      {"n_subproblems", record.final_front.size()},
      {"final_energy", record.steps.empty() ? 0.0 : record.steps.back().energy},
      {"final_igd", record.steps.empty() ? 0.0 : record.steps.back().igd},
      {"duration_seconds", record.duration_seconds},
  };
  return doc.dump(2) + "\n";
}

}  // namespace

void emit_outputs(const RunRecord& record, const fs::path& dir) {
  if (record.final_front.empty() || record.final_weights.empty() ||
      record.final_decisions.empty()) {
    throw std::invalid_argument("emit_outputs: record has no final state");
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create directory '" + dir.string() +
                             "': " + ec.message());
  }
  write_file(dir / "front.csv", front_csv(record));
  write_file(dir / "metrics.csv", metrics_csv(record));
  write_file(dir / "run.json", run_json(record));
}

RunRecord load_record(const fs::path& dir) {
  RunRecord record;

  const ordered_json doc = ordered_json::parse(read_file(dir / "run.json"));
  std::vector<std::pair<std::string, std::string>> items;
  for (const auto& [key, value] : doc.at("config").items()) {
    items.emplace_back(key, value.get<std::string>());
  }
  record.config = config_from_items(items);
  record.reference_seed = doc.at("reference").at("seed").get<std::uint64_t>();
  record.reference_points = doc.at("reference").at("count").get<int>();
  record.duration_seconds = doc.at("summary").at("duration_seconds").get<double>();

  {
    const fs::path path = dir / "metrics.csv";
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line) || line != "k,energy,igd") {
      throw std::runtime_error("unexpected header in '" + path.string() + "'");
    }
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto fields = split(line, ',');
      if (fields.size() != 3) {
        throw std::runtime_error("malformed row in '" + path.string() + "'");
      }
      StepSample step;
      step.k = static_cast<long>(parse_csv_double(fields[0], path));
      step.energy = parse_csv_double(fields[1], path);
      step.igd = parse_csv_double(fields[2], path);
      record.steps.push_back(std::move(step));
    }
  }

  {
    const fs::path path = dir / "front.csv";
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line)) {
      throw std::runtime_error("empty file '" + path.string() + "'");
    }
    const auto header = split(line, ',');
    int m = 0, d = 0;
    for (const std::string& name : header) {
      if (name.rfind("w_", 0) == 0) ++m;
      if (name.rfind("x_", 0) == 0) ++d;
    }
    if (m < 2 || d < 1 || header.size() != static_cast<std::size_t>(1 + 2 * m + d)) {
      throw std::runtime_error("unexpected header in '" + path.string() + "'");
    }
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto fields = split(line, ',');
      if (fields.size() != header.size()) {
        throw std::runtime_error("malformed row in '" + path.string() + "'");
      }
      Vec w(m), f(m), x(d);
      for (int l = 0; l < m; ++l) w(l) = parse_csv_double(fields[1 + l], path);
      for (int l = 0; l < m; ++l) f(l) = parse_csv_double(fields[1 + m + l], path);
      for (int l = 0; l < d; ++l) x(l) = parse_csv_double(fields[1 + 2 * m + l], path);
      record.final_weights.emplace_back(std::move(w));
      record.final_front.push_back(std::move(f));
      record.final_decisions.push_back(std::move(x));
    }
  }
  if (record.final_front.empty()) {
    throw std::runtime_error("no rows in '" + (dir / "front.csv").string() + "'");
  }
  return record;
}

}  // namespace mowa
