#include <CLI11.hpp>
#include <iostream>

#include "sixsplit/cli/commands.hpp"
#include "sixsplit/cli/json_io.hpp"

using namespace sixsplit::cli;

int main(int argc, char** argv) {
  CLI::App app{"Certified splitting of six points on the Riemann sphere by three disjoint discs"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SplitArgs split_args;
  auto* split = app.add_subcommand("split", "Pair the six input points and emit certified discs");
  split->add_option("-i,--input", split_args.input, "Input document (default stdin)");
  split->add_option("-o,--output", split_args.output, "Output document (default stdout)");
  split->add_option("-t,--tolerance", split_args.tolerance, "Certificate epsilon");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a document with points, discs and pairing");
  verify->add_option("-i,--input", verify_args.input, "Input document (default stdin)");
  verify->add_option("-t,--tolerance", verify_args.tolerance, "Certificate epsilon");

  FuzzArgs fuzz_args;
  auto* fuzz = app.add_subcommand("fuzz", "Run a seeded random campaign");
  fuzz->add_option("-n,--trials", fuzz_args.trials, "Number of trials")->capture_default_str();
  fuzz->add_option("-s,--seed", fuzz_args.seed, "Campaign seed")->capture_default_str();
  fuzz->add_option("--sampler", fuzz_args.sampler, "uniform, clustered or near-degenerate")
      ->capture_default_str();
  fuzz->add_option("-r,--report", fuzz_args.report, "Report path (default stdout)");

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "Draw points and discs as SVG");
  render->add_option("-i,--input", render_args.input, "Input document (default stdin)");
  render->add_option("-o,--output", render_args.output, "SVG path (default stdout)");
  render->add_option("--view", render_args.view, "plane or sphere")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  const Streams io{std::cin, std::cout, std::cerr};
  if (*split) return cmd_split(split_args, io);
  if (*verify) return cmd_verify(verify_args, io);
  if (*fuzz) return cmd_fuzz(fuzz_args, io);
  return cmd_render(render_args, io);
}
