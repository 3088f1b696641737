#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "confalg/errors.hpp"

using namespace confalg;
using namespace confalg::cli;

namespace {

struct InputFlags {
  std::string builtin;
  int n = 1;
  int g = 0;
  std::string input;
  int max_card = 1;
  std::string generator;
  std::string normalization = "constant";
  std::string format = "table";
  std::string cache_dir;
};

void add_input_flags(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--builtin", f.builtin, "Builtin space: affine, projective or curve");
  cmd->add_option("--n", f.n, "Dimension parameter for affine/projective builtins");
  cmd->add_option("--g", f.g, "Genus for the curve builtin");
  cmd->add_option("--input", f.input, "Path to an algebra document");
  cmd->add_option("--max-card", f.max_card, "Largest configuration cardinality");
  cmd->add_option("--generator", f.generator, "Generator space as deg[:weight][,...]; default 0:0");
  cmd->add_option("--format", f.format, "table, json or csv");
}

RunConfig to_config(const InputFlags& f) {
  RunConfig cfg;
  if (f.builtin.empty() == f.input.empty()) {
    throw Error(ErrorCode::ParseError, "exactly one of --builtin or --input is required");
  }
  if (!f.builtin.empty()) {
    const BuiltinId id = parse_builtin_id(f.builtin);
    cfg.input = BuiltinSpec{id, id == BuiltinId::SmoothProperCurve ? f.g : f.n};
  } else {
    cfg.input = std::filesystem::path(f.input);
  }
  cfg.max_card = f.max_card;
  if (!f.generator.empty()) cfg.generator = f.generator;
  cfg.normalization = parse_normalization(f.normalization);
  cfg.format = parse_format(f.format);
  if (!f.cache_dir.empty()) cfg.cache_dir = f.cache_dir;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of unordered configuration spaces with Frobenius weights"};
  app.require_subcommand(1);

  InputFlags compute_flags;
  auto* compute = app.add_subcommand("compute", "Compute gr H*_c(Conf_k X) for k = 1..max-card");
  add_input_flags(compute, compute_flags);
  compute->add_option("--normalization", compute_flags.normalization, "constant, dualizing or both");
  compute->add_option("--cache-dir", compute_flags.cache_dir, "Directory for cached result documents");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check an algebra document");
  validate_cmd->add_option("path", validate_path, "Algebra document")->required();

  InputFlags stability_flags;
  stability_flags.max_card = 2;
  auto* stability = app.add_subcommand("stability", "Dimension-level homological stability report");
  add_input_flags(stability, stability_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (*compute) return cmd_compute(to_config(compute_flags), std::cout, std::cerr);
    if (*validate_cmd) return cmd_validate(validate_path, std::cout, std::cerr);
    if (*stability) return cmd_stability(to_config(stability_flags), std::cout, std::cerr);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}
