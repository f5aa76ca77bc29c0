#pragma once

#include <filesystem>

#include "mowa/run.hpp"

namespace mowa {

/// Writes front.csv (i, w_1..w_m, f_1..f_m, x_1..x_d), metrics.csv
/// (k, energy, igd) and run.json (config, seed, summary) into dir. Numbers
/// are serialized with 17 significant digits, so parsing them back recovers
/// the exact doubles.
void emit_outputs(const RunRecord& record, const std::filesystem::path& dir);

/// Reads a previously emitted file set back into a RunRecord. Step samples
/// carry only the metric series (per-step weights and fronts are not
/// persisted); the final state is fully restored.
RunRecord load_record(const std::filesystem::path& dir);

}  // namespace mowa
