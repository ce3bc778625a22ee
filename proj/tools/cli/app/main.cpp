#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gsqg/error.hpp"
#include "gsqg_cli/commands.hpp"
#include "gsqg_cli/parallel.hpp"

using namespace gsqg;
using namespace gsqg::cli;

namespace {

void add_overrides(CLI::App* cmd, RunOptions& run, std::string& alpha, std::string& beta, std::string& delta,
                   std::string& em, std::string& dt, std::string& steps, std::string& seed) {
  cmd->add_option("--config", run.config, "Run config file")->required();
  cmd->add_option("--out", run.out, "Output directory")->capture_default_str();
  cmd->add_option("--alpha", alpha, "Override alpha");
  cmd->add_option("--beta", beta, "Override beta");
  cmd->add_option("--delta", delta, "Override delta");
  cmd->add_option("--em", em, "Override M");
  cmd->add_option("--dt", dt, "Override dt");
  cmd->add_option("--steps", steps, "Override the step count (clears horizon)");
  cmd->add_option("--seed", seed, "Override seed");
  cmd->footer(config_keys_help());
}

void collect_overrides(RunOptions& run, const std::string& alpha, const std::string& beta, const std::string& delta,
                       const std::string& em, const std::string& dt, const std::string& steps,
                       const std::string& seed) {
  const std::pair<const char*, const std::string*> keys[] = {{"alpha", &alpha}, {"beta", &beta}, {"delta", &delta},
                                                             {"M", &em},        {"dt", &dt},     {"steps", &steps},
                                                             {"seed", &seed}};
  for (const auto& [key, value] : keys) {
    if (!value->empty()) run.overrides.emplace_back(key, *value);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bending of corner-like gSQG patches: closed forms, oracles and contour dynamics"};
  app.require_subcommand(1);

  FTableOptions ftable;
  auto* f_cmd = app.add_subcommand("f-table", "Tabulate F(alpha, beta) to CSV and an SVG line plot");
  f_cmd->add_option("--alpha", ftable.alphas, "Alpha values, one curve each")->capture_default_str()->expected(1, -1);
  std::vector<double> beta_range;
  f_cmd->add_option("--beta", beta_range, "Beta range: lo hi step (default 0 4 0.01)")->expected(3);
  f_cmd->add_option("--tol", ftable.tol, "Quadrature tolerance")->capture_default_str();
  f_cmd->add_option("--out", ftable.out, "Output directory")->capture_default_str();

  BetaStarOptions bstar;
  auto* b_cmd = app.add_subcommand("beta-star", "Tabulate the critical slope beta*(alpha)");
  b_cmd->add_option("--alpha", bstar.alphas, "Alpha values in (0, 1)")->capture_default_str()->expected(1, -1);
  b_cmd->add_option("--tol", bstar.tol, "Bisection tolerance")->capture_default_str();
  b_cmd->add_option("--out", bstar.out, "Output directory")->capture_default_str();

  VerifyCommandOptions verify;
  std::string level = "quick";
  int verify_jobs = 0;
  std::string fault;
  auto* v_cmd = app.add_subcommand("verify", "Run the identity, oracle and dynamics checks");
  v_cmd->add_option("level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  v_cmd->add_option("--out", verify.out, "Directory for verify.json");
  v_cmd->add_option("--seed", verify.verify.seed, "Seed for the random probe points")->capture_default_str();
  v_cmd->add_option("--jobs", verify_jobs, "Worker threads (0 = all cores)")->capture_default_str();
  v_cmd->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"flip-f-sign"}));

  OracleOptions oracle;
  int oracle_jobs = 0;
  auto* o_cmd = app.add_subcommand("oracle", "Area-integral probes of v2 and its derivatives at (a, 0)");
  o_cmd->add_option("--alpha", oracle.alphas, "Alpha values")->capture_default_str()->expected(1, -1);
  o_cmd->add_option("--beta", oracle.betas, "Beta values")->capture_default_str()->expected(1, -1);
  o_cmd->add_option("--a", oracle.probes, "Probe points a")->capture_default_str()->expected(1, -1);
  o_cmd->add_option("--delta", oracle.delta, "Inner scale")->capture_default_str();
  o_cmd->add_option("--em", oracle.M, "Outer scale M")->capture_default_str();
  o_cmd->add_option("--jobs", oracle_jobs, "Worker threads (0 = all cores)")->capture_default_str();
  o_cmd->add_option("--out", oracle.out, "CSV file (default: stdout)");

  RunOptions sim, conv;
  std::string s_alpha, s_beta, s_delta, s_em, s_dt, s_steps, s_seed;
  std::string c_alpha, c_beta, c_delta, c_em, c_dt, c_steps, c_seed;
  auto* s_cmd = app.add_subcommand("simulate", "Evolve a patch boundary and write snapshots and SVG frames");
  add_overrides(s_cmd, sim, s_alpha, s_beta, s_delta, s_em, s_dt, s_steps, s_seed);
  auto* c_cmd = app.add_subcommand("convexity", "Evolve a convexified corner patch and report loss of convexity");
  add_overrides(c_cmd, conv, c_alpha, c_beta, c_delta, c_em, c_dt, c_steps, c_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (f_cmd->parsed()) {
      if (!beta_range.empty()) {
        ftable.beta_lo = beta_range[0];
        ftable.beta_hi = beta_range[1];
        ftable.beta_step = beta_range[2];
      }
      return cmd_f_table(ftable, std::cout);
    }
    if (b_cmd->parsed()) return cmd_beta_star(bstar, std::cout);
    if (v_cmd->parsed()) {
      verify.verify.level = level == "full" ? VerifyLevel::full : VerifyLevel::quick;
      verify.verify.jobs = verify_jobs > 0 ? verify_jobs : default_jobs();
      verify.verify.flip_f_sign = fault == "flip-f-sign";
      return cmd_verify(verify, std::cout);
    }
    if (o_cmd->parsed()) {
      oracle.jobs = oracle_jobs > 0 ? oracle_jobs : default_jobs();
      return cmd_oracle(oracle, std::cout);
    }
    if (s_cmd->parsed()) {
      collect_overrides(sim, s_alpha, s_beta, s_delta, s_em, s_dt, s_steps, s_seed);
      return cmd_simulate(sim, std::cout);
    }
    if (c_cmd->parsed()) {
      collect_overrides(conv, c_alpha, c_beta, c_delta, c_em, c_dt, c_steps, c_seed);
      return cmd_convexity(conv, std::cout);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
