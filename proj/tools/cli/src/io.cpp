#include "gsqg_cli/io.hpp"

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <system_error>

#include "gsqg/error.hpp"
#include "gsqg_cli/svg.hpp"

namespace gsqg::cli {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string snapshot_csv(const ContourState& state) {
  std::ostringstream o;
  o << kSnapshotHeader << '\n';
  const Contour& c = state.contour;
  for (std::size_t i = 0; i < c.size(); ++i) {
    o << format_number(c.nodes[i].x) << ',' << format_number(c.nodes[i].y) << ',' << format_number(c.labels[i])
      << ',' << format_number(c.ancestors[i].x) << ',' << format_number(c.ancestors[i].y) << ','
      << format_number(state.curvature[i]) << '\n';
  }
  return o.str();
}

nlohmann::json to_json(const GsqgParams& params) {
  return {{"alpha", params.alpha}, {"c_alpha", params.c_alpha}};
}

nlohmann::json to_json(const CornerSpec& spec) {
  return {{"beta", spec.beta}, {"delta", spec.delta}, {"M", spec.M}, {"target_area", spec.area()}};
}

nlohmann::json to_json(const SimConfig& config) {
  nlohmann::json j = {{"dt", config.dt},
                      {"n_steps", config.n_steps},
                      {"resample_every", config.resample_every},
                      {"target_spacing", config.target_spacing},
                      {"snapshot_times", config.snapshot_times},
                      {"snapshot_every", config.snapshot_every},
                      {"cfl_factor", config.cfl_factor}};
  if (config.grading) {
    j["grading"] = {{"min_spacing", config.grading->min_spacing},
                    {"growth", config.grading->growth},
                    {"max_spacing", config.grading->max_spacing}};
  }
  return j;
}

nlohmann::json to_json(const StepDiagnostics& d) {
  return {{"step", d.step},           {"time", d.time},           {"area", d.area},
          {"perimeter", d.perimeter}, {"min_kappa", d.min_kappa}, {"max_kappa", d.max_kappa},
          {"max_speed", d.max_speed}, {"spread", d.spread}};
}

nlohmann::json to_json(const RunSetup& setup) {
  nlohmann::json j = {{"params", to_json(setup.params)},
                      {"shape", to_string(setup.shape)},
                      {"config", to_json(setup.sim)},
                      {"seed", setup.seed}};
  switch (setup.shape) {
    case ShapeKind::corner:
      j["spec"] = to_json(setup.spec);
      j["nodes_per_unit"] = setup.nodes_per_unit;
      break;
    case ShapeKind::circle:
      j["radius"] = setup.radius;
      j["nodes"] = setup.nodes;
      break;
    case ShapeKind::ellipse:
      j["semi_major"] = setup.semi_major;
      j["semi_minor"] = setup.semi_minor;
      j["nodes"] = setup.nodes;
      break;
  }
  return j;
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw Error(ErrorKind::io_error, "cannot create directory " + dir);
  }
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

nlohmann::json write_trajectory(const std::string& dir, const RunSetup& setup, const Trajectory& trajectory,
                                const std::string& status) {
  ensure_directory(dir);
  nlohmann::json manifest = to_json(setup);
  manifest["status"] = status;
  manifest["snapshots"] = nlohmann::json::array();
  for (std::size_t k = 0; k < trajectory.snapshots.size(); ++k) {
    const ContourState& s = trajectory.snapshots[k];
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%03zu.csv", k);
    write_text_file(join_path(dir, name), snapshot_csv(s));
    manifest["snapshots"].push_back(
        {{"time", s.time}, {"nodes", s.size()}, {"file", name}, {"metadata", {{"perimeter", s.perimeter}}}});
  }
  nlohmann::json diag = nlohmann::json::array();
  for (const StepDiagnostics& d : trajectory.diagnostics) diag.push_back(to_json(d));
  manifest["diagnostics"] = std::move(diag);
  write_text_file(join_path(dir, "manifest.json"), manifest.dump(2) + "\n");
  return manifest;
}

}  // namespace gsqg::cli
