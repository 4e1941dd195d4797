#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "commands.hpp"
#include "ree/errors.hpp"

namespace {

const std::map<std::string, ree::LogBase> kLogBases{{"e", ree::LogBase::E}, {"2", ree::LogBase::Two}};

void add_log_base(CLI::App* cmd, ree::LogBase& target) {
  cmd->add_option("--log-base", target, "Logarithm base of printed entropies (e or 2)")
      ->transform(CLI::CheckedTransformer(kLogBases))
      ->default_str("e");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative entropy of entanglement for W-state reductions and the monogamy gap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "reemono 0.1.0");

  reemono::ReeArgs ree_args;
  auto* ree_cmd = app.add_subcommand("ree", "REE of the X state with populations (a, b, c)");
  ree_cmd->add_option("a", ree_args.a)->required();
  ree_cmd->add_option("b", ree_args.b)->required();
  ree_cmd->add_option("c", ree_args.c)->required();
  ree_cmd->add_option("--engine", ree_args.engine, "closed, numeric (two-angle search), general (product mixtures) or both")
      ->check(CLI::IsMember({"closed", "numeric", "general", "both"}))
      ->capture_default_str();
  ree_cmd->add_option("--seed", ree_args.seed, "Seed for the general engine")->capture_default_str();
  add_log_base(ree_cmd, ree_args.log_base);

  double lambda = 0.0;
  ree::LogBase vp_base = ree::LogBase::E;
  auto* vp_cmd = app.add_subcommand("vp", "REE of the Vedral-Plenio state with mixing lambda");
  vp_cmd->add_option("lambda", lambda)->required();
  add_log_base(vp_cmd, vp_base);

  reemono::DeltaArgs delta_args;
  auto* delta_cmd = app.add_subcommand("delta", "Monogamy gap of the W state alpha|001> + beta|010> + gamma|100>");
  delta_cmd->add_option("alpha", delta_args.alpha)->required();
  delta_cmd->add_option("beta", delta_args.beta)->required();
  delta_cmd->add_option("gamma", delta_args.gamma)->required();
  delta_cmd->add_option("--engine", delta_args.engine, "closed or numeric")
      ->check(CLI::IsMember({"closed", "numeric"}))
      ->capture_default_str();
  add_log_base(delta_cmd, delta_args.log_base);

  reemono::SweepConfig sweep_cfg;
  auto* sweep_cmd = app.add_subcommand("sweep", "Monogamy gap over the (beta^2, gamma^2) simplex grid");
  sweep_cmd->add_option("--resolution", sweep_cfg.resolution, "Grid subdivisions per edge")->capture_default_str();
  sweep_cmd->add_option("--engine", sweep_cfg.engine, "closed, numeric or both")
      ->check(CLI::IsMember({"closed", "numeric", "both"}))
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_cfg.out_csv, "CSV output path (stdout when omitted)");
  sweep_cmd->add_option("--svg", sweep_cfg.out_svg, "SVG heatmap output path");
  sweep_cmd->add_option("--seed", sweep_cfg.seed, "Seed recorded in the CSV metadata")->capture_default_str();
  add_log_base(sweep_cmd, sweep_cfg.log_base);

  reemono::VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Seeded cross-checks of the closed form against the numerical oracles");
  verify_cmd->add_option("--samples", verify_args.samples, "Random inputs per suite")->capture_default_str();
  verify_cmd->add_option("--seed", verify_args.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : reemono::kInvalidInput;
  }

  try {
    if (ree_cmd->parsed()) return reemono::cmd_ree(ree_args, std::cout, std::cerr);
    if (vp_cmd->parsed()) return reemono::cmd_vp(lambda, vp_base, std::cout, std::cerr);
    if (delta_cmd->parsed()) return reemono::cmd_delta(delta_args, std::cout, std::cerr);
    if (sweep_cmd->parsed()) return reemono::cmd_sweep(sweep_cfg, std::cout, std::cerr);
    if (verify_cmd->parsed()) return reemono::cmd_verify(verify_args, std::cout, std::cerr);
  } catch (const ree::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return reemono::kIoFailure;
  } catch (const ree::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return reemono::kInvalidInput;
  }
  return reemono::kInvalidInput;
}
