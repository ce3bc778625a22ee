#pragma once

#include <string>

#include "json.hpp"

#include "gsqg/dynamics.hpp"
#include "gsqg_cli/setup.hpp"

namespace gsqg::cli {

/// Fixed-precision number formatting shared by every CSV writer, so identical
/// inputs give byte-identical files.
std::string format_number(double v);

inline constexpr const char* kSnapshotHeader = "x,y,label,ancestor_x,ancestor_y,kappa";

std::string snapshot_csv(const ContourState& state);

nlohmann::json to_json(const GsqgParams& params);
nlohmann::json to_json(const CornerSpec& spec);
nlohmann::json to_json(const SimConfig& config);
nlohmann::json to_json(const StepDiagnostics& d);
nlohmann::json to_json(const RunSetup& setup);

/// Writes snapshot_NNN.csv files and manifest.json into `dir` (created if needed).
/// Returns the manifest.
nlohmann::json write_trajectory(const std::string& dir, const RunSetup& setup, const Trajectory& trajectory,
                                const std::string& status);

void ensure_directory(const std::string& dir);
std::string join_path(const std::string& dir, const std::string& name);

}  // namespace gsqg::cli
