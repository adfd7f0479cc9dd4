#pragma once

#include <string>
#include <vector>

#include "kzq/sweep.hpp"

#include "report.hpp"

namespace kzqtool {

std::string lz_csv(const std::vector<kzq::LzRow>& rows, bool tomographic);
std::string rm_total_csv(const std::vector<kzq::SweepResult>& results);
std::string rm_momentum_csv(const std::vector<kzq::SweepResult>& results);

// Grouped (tau, n) curves in sweep order; y is the numeric column for
// crossing sweeps and the aggregate total for ramp sweeps.
Curves lz_curves(const std::vector<kzq::LzRow>& rows);
Curves rm_curves(const std::vector<kzq::SweepResult>& results);

}  // namespace kzqtool
