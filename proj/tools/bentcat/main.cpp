#include <iostream>

#include "CLI11.hpp"
#include "bentcat/errors.hpp"
#include "commands.hpp"

using namespace bentcat;
using namespace bentcat::cli;

namespace {

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--budget", common.budget, "Node budget for each subspace search");
  cmd->add_option("--json-out", common.json_out, "Also write the report to this file");
  cmd->add_flag("--timing", common.timing, "Include wall-clock timing (reports stop being byte-stable)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bent function concatenation toolkit"};
  app.require_subcommand(1);

  CommonOptions common;
  std::uint64_t seed = 0;

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Spectrum, degree, dual and M# verdict of functions");
  analyze_cmd->add_option("--input", analyze.inputs, "Truth-table or ANF file")->check(CLI::ExistingFile);
  analyze_cmd->add_option("--fixture-dir", analyze.fixture_dir, "Analyze every .tt/.anf/.txt file in a directory")
      ->check(CLI::ExistingDirectory);
  analyze_cmd->add_option("--format", analyze.format, "auto, tt or anf")->capture_default_str();
  analyze_cmd->add_flag("--no-search", analyze.skip_search, "Skip the M-subspace searches");
  add_common(analyze_cmd, common);

  ConstructOptions construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build a bent function from a JSON recipe");
  construct_cmd->add_option("--recipe", construct.recipe, "Recipe JSON file")->required()->check(CLI::ExistingFile);
  construct_cmd->add_option("--output", construct.output, "Truth-table output file (directory for alpha sweeps)");
  construct_cmd->add_flag("--classify", construct.classify, "Also decide M# membership of the result");
  auto* construct_seed = construct_cmd->add_option("--seed", seed, "Seed for sampled parameters");
  add_common(construct_cmd, common);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a structural criterion against a direct oracle");
  verify_cmd->add_option("--theorem", verify.theorem, "thm1, cor1, thm3, cor2, insideMMgh, rind-bound, dual-sum or korsakova-class")
      ->required()
      ->check(CLI::IsMember({"thm1", "cor1", "thm3", "cor2", "insideMMgh", "rind-bound", "dual-sum", "korsakova-class"}));
  verify_cmd->add_option("--input", verify.inputs, "Input functions instead of generated instances")->check(CLI::ExistingFile);
  verify_cmd->add_option("--format", verify.format, "auto, tt or anf")->capture_default_str();
  verify_cmd->add_option("--count", verify.count, "Number of generated instances")->capture_default_str();
  verify_cmd->add_option("--n", verify.n, "Variables per piece (theorem default when omitted)");
  verify_cmd->add_option("--k", verify.k, "Dimension parameter for rind-bound (default n/2)");
  auto* verify_seed = verify_cmd->add_option("--seed", seed, "Seed for generated instances");
  add_common(verify_cmd, common);

  CLI11_PARSE(app, argc, argv);

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (analyze_cmd->parsed()) {
      Report report("analyze", args, common);
      return run_analyze(analyze, report, common);
    }
    if (construct_cmd->parsed()) {
      if (construct_seed->count() > 0) common.seed = seed;
      Report report("construct", args, common);
      return run_construct(construct, report, common);
    }
    if (verify_seed->count() > 0) common.seed = seed;
    Report report("verify", args, common);
    return run_verify(verify, report, common);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
