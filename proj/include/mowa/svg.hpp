#pragma once

#include <filesystem>

#include "mowa/run.hpp"

namespace mowa {

/// Renders front.svg (objective-space scatter with analytic front overlay;
/// three pairwise projections for m = 3), simplex.svg (weights on a segment
/// for m = 2, barycentric triangle for m = 3) and metrics.svg (energy and IGD
/// vs adaptation step, log ordinate) into dir. Computed points are <circle
/// class="pt"> elements. Throws for m > 3.
void plot_svg(const RunRecord& record, const std::filesystem::path& dir);

}  // namespace mowa
