#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using asm_census::cli::RunConfig;

struct RawFlags {
  std::string symmetry;
  std::string format = "text";
  int cap = 0;
  bool no_cache = false;
};

void add_common(CLI::App* sub, RunConfig& cfg, RawFlags& raw) {
  sub->add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", cfg.out_path, "Output file (default stdout)");
  sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--cap", raw.cap, "Largest order the enumerators accept")->envname("ASM_CENSUS_CAP");
  sub->add_option("--cache", cfg.cache_path, "Census cache file");
  sub->add_flag("--no-cache", raw.no_cache, "Neither read nor write the cache");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and center-structure census of symmetric alternating sign matrices"};
  app.require_subcommand(1);
  app.name("asm-census");

  RunConfig cfg;
  RawFlags raw;

  auto* count = app.add_subcommand("count", "Count all ASMs of order n");
  count->add_option("--n", cfg.n, "Order")->required();
  count->add_option("--method", cfg.method, "enumerate or formula (default: both when feasible)")
      ->check(CLI::IsMember({"enumerate", "formula"}));

  auto* census = app.add_subcommand("census", "Census of symmetric ASMs by center structure");
  census->add_option("--n", cfg.n, "Odd order")->required();
  census->add_option("--class", raw.symmetry, "ht, qt or dd")->required()->check(CLI::IsMember({"ht", "qt", "dd"}));

  auto* verify = app.add_subcommand("verify", "Check the ratio relations over odd orders up to max-n");
  verify->add_option("--conjecture", cfg.conjecture, "ht, 1a, 1b, 2 or all")
      ->required()
      ->check(CLI::IsMember({"ht", "1a", "1b", "2", "all"}));
  verify->add_option("--max-n", cfg.max_n, "Largest order")->required();

  auto* list = app.add_subcommand("list", "Print the first matrices of a class");
  list->add_option("--n", cfg.n, "Order")->required();
  list->add_option("--class", raw.symmetry, "ht, qt, dd or all")
      ->required()
      ->check(CLI::IsMember({"ht", "qt", "dd", "all"}));
  list->add_option("--limit", cfg.limit, "Number of matrices")->check(CLI::NonNegativeNumber);

  auto* selfcheck = app.add_subcommand("selfcheck", "Cross-check the engine against independent oracles");
  selfcheck->add_option("--max-n", cfg.max_n, "Largest order (at most 7)")->required();

  for (auto* sub : {count, census, verify, list, selfcheck}) add_common(sub, cfg, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : asm_census::cli::kExitUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (!raw.symmetry.empty()) cfg.symmetry = asm_census::parse_symmetry_class(raw.symmetry);
  cfg.format = *asm_census::cli::parse_format(raw.format);
  if (raw.cap > 0) cfg.cap = raw.cap;
  cfg.use_cache = !raw.no_cache;

  if (cfg.out_path.empty()) return asm_census::cli::run(cfg, std::cout, std::cerr);
  std::ofstream out(cfg.out_path);
  if (!out) {
    std::cerr << "usage error: cannot open " << cfg.out_path << " for writing\n";
    return asm_census::cli::kExitUsage;
  }
  return asm_census::cli::run(cfg, out, std::cerr);
}
