// Command line driver: run the claim suite, list the catalog, export spaces.

#include "isocoh/geometry.hpp"
#include "isocoh/serialize.hpp"
#include "isocoh/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

constexpr const char* kConfigEnv = "ISOCOH_CONFIG";

int run_verify(const std::vector<std::string>& groups, const std::string& config_path, bool seed_given,
               std::uint64_t seed, bool json) {
  isocoh::VerifyConfig cfg;
  try {
    std::string path = config_path;
    if (path.empty()) {
      if (const char* env = std::getenv(kConfigEnv)) path = env;
    }
    if (!path.empty()) cfg = isocoh::load_config(path);
  } catch (const isocoh::ConfigError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  if (!groups.empty()) cfg.groups = groups;
  if (seed_given) cfg.seed = seed;
  const isocoh::SuiteResult result = isocoh::run_suite(cfg);
  std::cout << (json ? isocoh::render_json_lines(result) : isocoh::render_text(result));
  return result.exit_code();
}

int run_catalog(bool json) {
  if (json) {
    for (const auto& e : isocoh::catalog_entries()) {
      const isocoh::ReductiveSpace s = isocoh::build_catalog_space(e.id);
      const isocoh::Fingerprint f = isocoh::fingerprint(s.algebra);
      isocoh::Json j{{"schema_version", 1},
                     {"id", e.id},
                     {"family", e.family},
                     {"fibre", e.fibre},
                     {"base", e.base},
                     {"dim_g", s.dim()},
                     {"dim_k", s.k_dim()},
                     {"dim_m1", s.block_dim(0)},
                     {"dim_m2", s.block_dim(1)},
                     {"killing", {f.killing.positive, f.killing.negative, f.killing.zero}},
                     {"center_dim", f.center_dim},
                     {"nilpotency_class", f.nilpotency_class}};
      std::cout << j.dump() << '\n';
    }
    return 0;
  }
  std::cout << std::left << std::setw(40) << "id" << std::setw(12) << "family" << std::setw(7) << "dim g"
            << std::setw(7) << "dim k" << std::setw(6) << "m1" << std::setw(6) << "m2"
            << "fingerprint\n";
  for (const auto& e : isocoh::catalog_entries()) {
    const isocoh::ReductiveSpace s = isocoh::build_catalog_space(e.id);
    std::cout << std::left << std::setw(40) << e.id << std::setw(12) << e.family << std::setw(7) << s.dim()
              << std::setw(7) << s.k_dim() << std::setw(6) << s.block_dim(0) << std::setw(6) << s.block_dim(1)
              << isocoh::to_string(isocoh::fingerprint(s.algebra)) << '\n';
  }
  return 0;
}

int run_export(const std::string& id, const std::string& out) {
  isocoh::ReductiveSpace s;
  try {
    s = isocoh::build_catalog_space(id);
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  const std::string text = isocoh::to_json(s).dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "cannot write '" << out << "'\n";
    return 2;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomogeneity-two homogeneous spaces: construction and verification"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run the claim suite (exit 0 all pass, 1 any fail, 2 config error)");
  std::vector<std::string> groups;
  std::string config_path;
  std::uint64_t seed = 0;
  bool json = false;
  verify->add_option("--group", groups, "Claim group (repeatable)")
      ->check(CLI::IsMember(isocoh::claim_groups()));
  verify->add_option("--config", config_path, std::string("INI configuration file (default: $") + kConfigEnv + ")");
  auto* seed_opt = verify->add_option("--seed", seed, "Sampling seed (overrides the configuration)");
  verify->add_flag("--json", json, "Emit JSON lines (schema_version 1)");

  auto* cat = app.add_subcommand("catalog", "List catalog spaces with dimensions and fingerprints");
  bool cat_json = false;
  cat->add_flag("--json", cat_json, "Emit JSON lines");

  auto* exp = app.add_subcommand("export", "Export a catalog space as JSON");
  std::string id, out;
  exp->add_option("space-id", id, "Catalog id")->required();
  exp->add_option("--out", out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*verify) return run_verify(groups, config_path, seed_opt->count() > 0, seed, json);
  if (*cat) return run_catalog(cat_json);
  if (*exp) return run_export(id, out);
  return 2;
}
