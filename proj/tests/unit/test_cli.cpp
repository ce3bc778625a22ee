#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gsqg_cli/commands.hpp"
#include "gsqg_cli/config.hpp"
#include "gsqg_cli/setup.hpp"
#include "gsqg_cli/svg.hpp"
#include "gsqg_cli/verify.hpp"
#include "json.hpp"
#include "support/helpers.hpp"

namespace {

using namespace gsqg;
using namespace gsqg::cli;
using gsqg::test::kind_of;
namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("gsqg_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string str() const { return path_.string(); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

KeyValueConfig parse(const std::string& text) {
  std::istringstream in(text);
  return KeyValueConfig::parse(in, "test.toml");
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(GSQG_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::vector<double>> read_csv(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
      if (cell != "true" && cell != "false") row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

TEST(Config, ParsesScalarsStringsListsAndSections) {
  const KeyValueConfig c = parse(
      "# comment\nalpha = 0.5\nshape = \"corner\"\nsnapshot_times = [0.1, 0.2 ,0.4]\n[sim]\ndt = 1e-3 # trailing\n");
  EXPECT_DOUBLE_EQ(c.get_double("alpha", 0.0), 0.5);
  EXPECT_EQ(c.get_string("shape", ""), "corner");
  EXPECT_EQ(c.get_list("snapshot_times", {}), (std::vector<double>{0.1, 0.2, 0.4}));
  EXPECT_DOUBLE_EQ(c.get_double("sim.dt", 0.0), 1e-3);
  EXPECT_EQ(c.get_int("missing", 7), 7);
  EXPECT_FALSE(c.has("dt"));
}

TEST(Config, ErrorsNameTheLine) {
  try {
    parse("alpha = 0.5\nthis line is wrong\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse_error);
    EXPECT_NE(std::string(e.what()).find("test.toml:2"), std::string::npos) << e.what();
  }
  const KeyValueConfig c = parse("alpha = 0.5\nbeta = abc\n");
  EXPECT_EQ(kind_of([&] { c.get_double("beta", 0.0); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([&] { c.require_known({"alpha"}); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { KeyValueConfig::from_file("/nonexistent/x.toml"); }), ErrorKind::io_error);
}

TEST(Setup, ReadsCornerAndRejectsUnknownKeys) {
  const RunSetup s = read_setup(parse("shape = \"corner\"\nalpha = 0.3\nbeta = 2.7\ndelta = 0.01\nM = 1\n"));
  EXPECT_EQ(s.shape, ShapeKind::corner);
  EXPECT_DOUBLE_EQ(s.params.alpha, 0.3);
  EXPECT_DOUBLE_EQ(s.spec.beta, 2.7);
  EXPECT_EQ(kind_of([] { read_setup(parse("alpah = 0.3\n")); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { read_setup(parse("shape = \"square\"\n")); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { read_setup(parse("shape = \"corner\"\ndelta = 0.5\n")); }), ErrorKind::invalid_parameter);
}

TEST(Setup, ResolvesTimeStepping) {
  RunSetup s = read_setup(parse("shape = \"circle\"\nalpha = 0.5\nnodes = 64\nhorizon = 0.1\n"));
  const Contour c = initial_contour(s);
  EXPECT_EQ(c.size(), 64u);
  resolve_time_stepping(s, c);
  EXPECT_GT(s.sim.dt, 0.0);
  EXPECT_GE(s.sim.n_steps * s.sim.dt, 0.1 - 1e-12);
  EXPECT_EQ(s.sim.snapshot_every, s.sim.n_steps);
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(exit_code_for(ErrorKind::parse_error), kExitUsage);
  EXPECT_EQ(exit_code_for(ErrorKind::invalid_parameter), kExitUsage);
  EXPECT_EQ(exit_code_for(ErrorKind::probe_out_of_range), kExitUsage);
  EXPECT_EQ(exit_code_for(ErrorKind::no_breaking_observed), kExitNoBreaking);
  EXPECT_EQ(exit_code_for(ErrorKind::cfl_violation), kExitNumerical);
}

TEST(Commands, FTableOrderingAndDeterminism) {
  TempDir dir;
  FTableOptions opt;
  opt.beta_step = 0.05;
  opt.out = dir.str();
  std::ostringstream log;
  ASSERT_EQ(cmd_f_table(opt, log), kExitOk);
  const std::string first = slurp(dir.file("f_table.csv"));
  ASSERT_EQ(cmd_f_table(opt, log), kExitOk);
  EXPECT_EQ(first, slurp(dir.file("f_table.csv")));
  EXPECT_EQ(first.rfind("alpha,beta,integral_I,f_value\n", 0), 0u);
  const auto rows = read_csv(dir.file("f_table.csv"));
  const std::size_t per_alpha = rows.size() / opt.alphas.size();
  ASSERT_EQ(per_alpha * opt.alphas.size(), rows.size());
  for (std::size_t j = 0; j < per_alpha; ++j) {
    const double euler = rows[j][3];
    for (std::size_t k = 1; k < opt.alphas.size(); ++k) EXPECT_GE(euler, rows[k * per_alpha + j][3]);
  }
  const std::string svg = slurp(dir.file("f_table.svg"));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  opt.alphas.clear();
  EXPECT_EQ(kind_of([&] { cmd_f_table(opt, log); }), ErrorKind::invalid_parameter);
}

TEST(Commands, BetaStarTable) {
  TempDir dir;
  BetaStarOptions opt;
  opt.out = dir.str();
  std::ostringstream log;
  ASSERT_EQ(cmd_beta_star(opt, log), kExitOk);
  const auto rows = read_csv(dir.file("beta_star.csv"));
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_NEAR(rows[4][1], 1.32254146518650, 1e-8);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i][1], rows[i - 1][1]);
  opt.alphas = {1.0};
  EXPECT_EQ(kind_of([&] { cmd_beta_star(opt, log); }), ErrorKind::no_root);
}

TEST(Commands, OracleCsvAndProbeRange) {
  OracleOptions opt;
  opt.alphas = {0.5, 1.0};
  opt.probes = {0.05, 0.1};
  std::ostringstream out;
  ASSERT_EQ(cmd_oracle(opt, out), kExitOk);
  std::istringstream in(out.str());
  std::string line;
  int n = 0;
  while (std::getline(in, line)) ++n;
  EXPECT_EQ(n, 5);
  opt.probes = {0.9};
  EXPECT_EQ(kind_of([&] { cmd_oracle(opt, out); }), ErrorKind::probe_out_of_range);
}

TEST(Svg, ContourAndPlotDocuments) {
  const std::string plot = line_plot_svg({{"a", {0, 1, 2}, {1, -1, 0.5}}}, "x", "y");
  const std::string contour = contour_svg({{test::circle(32).nodes, ramp_color(0.5), 1.0, 1.5}}, 1.2, "t = 0");
  for (const std::string& s : {plot, contour}) {
    EXPECT_EQ(s.rfind("<?xml", 0), 0u);
    std::size_t open = 0, close = 0;
    for (std::size_t p = s.find("<svg"); p != std::string::npos; p = s.find("<svg", p + 1)) ++open;
    for (std::size_t p = s.find("</svg>"); p != std::string::npos; p = s.find("</svg>", p + 1)) ++close;
    EXPECT_EQ(open, 1u);
    EXPECT_EQ(close, 1u);
  }
  EXPECT_EQ(ramp_color(0.0).size(), 7u);
}

TEST(Commands, SimulateWritesManifest) {
  TempDir dir;
  std::ofstream(dir.file("run.toml")) << "shape = \"circle\"\nalpha = 0.5\nnodes = 64\nhorizon = 0.02\n"
                                         "snapshot_times = [0.01, 0.02]\n";
  RunOptions opt;
  opt.config = dir.file("run.toml");
  opt.out = dir.file("out");
  std::ostringstream log;
  ASSERT_EQ(cmd_simulate(opt, log), kExitOk);
  const nlohmann::json m = nlohmann::json::parse(slurp(dir.file("out/manifest.json")));
  ASSERT_EQ(m["snapshots"].size(), 3u);
  EXPECT_DOUBLE_EQ(m["params"]["alpha"].get<double>(), 0.5);
  const std::string snap = slurp(dir.file("out/" + m["snapshots"][1]["file"].get<std::string>()));
  EXPECT_EQ(snap.rfind("x,y,label,ancestor_x,ancestor_y,kappa\n", 0), 0u);
  opt.overrides = {{"alpha", "2.5"}};
  EXPECT_EQ(kind_of([&] { cmd_simulate(opt, log); }), ErrorKind::invalid_parameter);
}

TEST(Verify, QuickPassesAndFaultIsCaught) {
  VerifyOptions opt;
  opt.level = VerifyLevel::quick;
  opt.jobs = 1;
  const VerifyReport ok = run_verify(opt);
  EXPECT_TRUE(ok.passed()) << ok.to_text();
  opt.flip_f_sign = true;
  const VerifyReport bad = run_verify(opt);
  EXPECT_FALSE(bad.passed());
  bool sign_failed = false;
  for (const CheckResult& c : bad.checks) sign_failed = sign_failed || (c.name == "sign-theorem" && !c.passed);
  EXPECT_TRUE(sign_failed);
}

TEST(Binary, ExitCodes) {
  TempDir dir;
  std::ofstream(dir.file("bad.toml")) << "alpha = 0.5\nnot a pair\n";
  EXPECT_EQ(run_binary("simulate --config " + dir.file("bad.toml") + " --out " + dir.str()), kExitUsage);
  EXPECT_EQ(run_binary("frobnicate"), kExitUsage);
  EXPECT_EQ(run_binary("--help"), kExitOk);
  EXPECT_EQ(run_binary("oracle --a 5"), kExitUsage);
  std::ofstream(dir.file("circle.toml")) << "shape = \"circle\"\nalpha = 1.0\nnodes = 64\nhorizon = 0.01\n";
  EXPECT_EQ(run_binary("convexity --config " + dir.file("circle.toml") + " --out " + dir.str()), kExitNoBreaking);
  EXPECT_EQ(run_binary("beta-star --alpha 0.5 --out " + dir.str()), kExitOk);
  EXPECT_TRUE(fs::exists(dir.file("beta_star.csv")));
}

}  // namespace
