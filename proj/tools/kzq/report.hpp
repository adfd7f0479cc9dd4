#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kzq/analysis.hpp"
#include "kzq/config.hpp"
#include "kzq/manifest.hpp"

namespace kzqtool {

using json = nlohmann::ordered_json;

// One curve per delta_max, keyed by the delta_max value.
using Curves = std::vector<std::pair<double, std::vector<kzq::DataPoint>>>;

json config_echo_json(const kzq::Config& cfg);

json fit_json(const kzq::PowerLawFit& fit);

// The full extraction report: per-curve slow-branch exponents, plateaus and
// critical abscissas, plus the cross-delta_max exponents b and c when at
// least three curves support them (null otherwise). When `coupling` is
// given the curves are crossing sweeps and the report also carries the
// one-parameter critical-law fit over (x_c, tau_c).
json analysis_json(const Curves& curves, kzq::WindowRule rule, double eps,
                   std::optional<double> coupling);

// dump(2) with a trailing newline; the one JSON serialization everywhere,
// so byte-level reproducibility holds across commands.
std::string dump_json(const json& j);

void add_json_file(kzq::RunManifest& manifest, const std::string& name,
                   const json& j);

std::string tool_version();

}  // namespace kzqtool
