// Copyright 2026 The cgt-domineering Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the engine only through the C API.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgt/cgt.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// Thrown for failures the user can act on; exit code 1.
struct DomainError {
  std::string message;
};

void check(cgt_status status) {
  if (status != CGT_OK) throw DomainError{std::string(cgt_status_name(status)) + ": " + cgt_last_error()};
}

struct ContextDeleter {
  void operator()(cgt_context* c) const { cgt_context_destroy(c); }
};
struct RecordsDeleter {
  void operator()(cgt_records* r) const { cgt_records_destroy(r); }
};
struct EvaluationDeleter {
  void operator()(cgt_evaluation* e) const { cgt_evaluation_destroy(e); }
};
struct ReportDeleter {
  void operator()(cgt_family_report* r) const { cgt_family_report_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { cgt_string_free(s); }
};
using Context = std::unique_ptr<cgt_context, ContextDeleter>;
using Records = std::unique_ptr<cgt_records, RecordsDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

Context make_context() {
  cgt_context* ctx = nullptr;
  check(cgt_context_create(&ctx));
  return Context(ctx);
}

const std::map<std::string, cgt_thermograph_method> kMethods = {
    {"scaffold", CGT_THERMOGRAPH_SCAFFOLD},
    {"direct", CGT_THERMOGRAPH_DIRECT},
};

// Fractions on the command line: integers or p/q with q a power of two.
std::string fraction_validator(const std::string& text) {
  const auto slash = text.find('/');
  auto digits = [](const std::string& s, bool sign) {
    std::size_t i = sign && !s.empty() && s[0] == '-' ? 1 : 0;
    return i < s.size() && s.find_first_not_of("0123456789", i) == std::string::npos;
  };
  if (slash == std::string::npos) return digits(text, true) ? "" : "expected an integer or p/q";
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) return "expected an integer or p/q";
  const unsigned long long q = std::stoull(den);
  if (q == 0 || (q & (q - 1)) != 0) return "denominator of " + text + " is not a power of two";
  return "";
}

void count_hooks(const cgt_records* records) {
  std::size_t hooks = 0;
  const std::size_t n = cgt_records_count(records);
  for (std::size_t i = 0; i < n; ++i) {
    const char* grid = nullptr;
    check(cgt_records_get(records, i, &grid, nullptr, nullptr));
    int has = 0;
    check(cgt_grid_contains_hook(grid, &has));
    hooks += has;
  }
  std::cout << "contains hook: " << hooks << " of " << n << "\n";
}

struct SearchFlags {
  std::string min_temperature;
  int max_empty_tiles = -1;
  bool include_decompositions = false;
  std::string method = "scaffold";
  bool strictly_above = false;
  std::string symmetry = "dihedral";
  std::size_t max_cached_positions = CGT_DEFAULT_CACHED_POSITIONS;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--min-temperature", min_temperature, "Keep positions with temperature >= this fraction")
        ->check(CLI::Validator(fraction_validator, "FRACTION"));
    cmd->add_flag("--strictly-above", strictly_above, "Keep only temperatures above --min-temperature");
    cmd->add_option("--max-empty-tiles", max_empty_tiles, "Skip positions with more empty cells")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--include-decompositions", include_decompositions,
                  "Also consider positions whose empty cells are not connected");
    cmd->add_option("--thermograph-method", method, "Temperature computation: scaffold or direct")
        ->check(CLI::IsMember({"scaffold", "direct"}));
    cmd->add_option("--symmetry", symmetry,
                    "Positions counted as duplicates: dihedral (all 8 images) or value-preserving (flips, half turn)")
        ->check(CLI::IsMember({"dihedral", "value-preserving"}));
    cmd->add_option("--max-cached-positions", max_cached_positions,
                    "Bound on cached position values, 0 for no bound")
        ->capture_default_str();
  }

  Context context() const {
    Context ctx = make_context();
    check(cgt_context_set_cache_limit(ctx.get(), max_cached_positions));
    return ctx;
  }

  cgt_search_config config() const {
    cgt_search_config c;
    cgt_search_config_init(&c);
    c.min_temperature = min_temperature.c_str();
    c.max_empty_tiles = max_empty_tiles;
    c.allow_decomposable = include_decompositions;
    c.method = kMethods.at(method);
    c.strict_threshold = strictly_above;
    c.symmetry = symmetry == "dihedral" ? CGT_SYMMETRY_DIHEDRAL : CGT_SYMMETRY_VALUE_PRESERVING;
    return c;
  }
};

struct ExhaustiveArgs {
  int width = 0;
  int height = 0;
  std::string output_path;
  SearchFlags flags{"-1"};
  bool no_spanning = false;
  bool no_symmetry_dedup = false;
  int workers = 1;
  bool contains_hook = false;
};

int run_exhaustive(const ExhaustiveArgs& a) {
  Context ctx = a.flags.context();
  cgt_search_config c = a.flags.config();
  c.width = a.width;
  c.height = a.height;
  c.require_spanning = !a.no_spanning;
  c.dedup_symmetry = !a.no_symmetry_dedup;
  c.workers = a.workers;
  cgt_records* raw = nullptr;
  check(cgt_exhaustive_search(ctx.get(), &c, &raw));
  Records records(raw);
  check(cgt_records_write(records.get(), a.output_path.c_str()));
  std::cout << "found " << cgt_records_count(records.get()) << " positions " << (a.flags.strictly_above ? ">" : ">=")
            << " " << a.flags.min_temperature << "\n";
  if (a.contains_hook) count_hooks(records.get());
  return 0;
}

struct LatexArgs {
  std::string in_file;
  std::string out_file;
  int columns = 3;
  double scale = 0.4;
  bool no_header = false;
};

int run_latex(const LatexArgs& a) {
  cgt_records* raw = nullptr;
  check(cgt_records_read(a.in_file.c_str(), &raw));
  Records records(raw);
  char* text = nullptr;
  check(cgt_latex_table(records.get(), a.columns, a.scale, !a.no_header, &text));
  OwnedString owned(text);
  std::ofstream out(a.out_file, std::ios::binary);
  out << owned.get();
  out.flush();
  if (!out) throw DomainError{"cannot write " + a.out_file};
  return 0;
}

struct EvaluateArgs {
  std::string grid;
  bool from_stdin = false;
  std::string method = "scaffold";
};

int run_evaluate(const EvaluateArgs& a) {
  std::string grid = a.grid;
  if (a.from_stdin) {
    std::getline(std::cin, grid);
    while (!grid.empty() && (grid.back() == '\r' || grid.back() == ' ')) grid.pop_back();
  }
  Context ctx = make_context();
  cgt_evaluation* raw = nullptr;
  check(cgt_evaluate(ctx.get(), grid.c_str(), kMethods.at(a.method), &raw));
  std::unique_ptr<cgt_evaluation, EvaluationDeleter> e(raw);
  std::cout << "value=" << cgt_evaluation_value(e.get()) << "\ttemperature=" << cgt_evaluation_temperature(e.get())
            << "\n";
  std::cout << "mast=" << cgt_evaluation_mast(e.get()) << "\n";
  const std::size_t n = cgt_evaluation_component_count(e.get());
  for (std::size_t i = 0; i < n; ++i) {
    const char* part = nullptr;
    const char* value = nullptr;
    const char* temperature = nullptr;
    check(cgt_evaluation_component(e.get(), i, &part, &value, &temperature));
    std::cout << "component " << (i + 1) << "\t" << part << "\tvalue=" << value << "\ttemperature=" << temperature
              << "\n";
  }
  return 0;
}

struct FamilyArgs {
  std::string family;
  int n_max = 0;
};

int run_family(const FamilyArgs& a) {
  const int n_max = a.n_max > 0 ? a.n_max : (a.family == "Lcup" || a.family == "DCL" ? 3 : 5);
  Context ctx = make_context();
  cgt_family_report* raw = nullptr;
  check(cgt_family_check(ctx.get(), a.family.c_str(), n_max, &raw));
  std::unique_ptr<cgt_family_report, ReportDeleter> report(raw);
  bool all = true;
  const std::size_t rows = cgt_family_report_count(report.get());
  for (std::size_t i = 0; i < rows; ++i) {
    int n = 0;
    int pass = 0;
    const char* expected = nullptr;
    const char* computed = nullptr;
    const char* temperature = nullptr;
    check(cgt_family_report_get(report.get(), i, &n, nullptr, &expected, &computed, &temperature, &pass));
    std::cout << a.family << " n=" << n << "\texpected=" << expected << "\tcomputed=" << computed;
    if (temperature) std::cout << "\ttemperature=" << temperature;
    std::cout << "\t" << (pass ? "PASS" : "FAIL") << "\n";
    all = all && pass;
  }
  return all ? 0 : kExitDomain;
}

// Seeds come as a results file or as one grid string per line.
std::vector<std::string> read_seeds(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError{"cannot open " + path};
  std::string first;
  std::getline(in, first);
  std::vector<std::string> seeds;
  if (first.rfind("#cgt-search", 0) == 0) {
    cgt_records* raw = nullptr;
    check(cgt_records_read(path.c_str(), &raw));
    Records records(raw);
    for (std::size_t i = 0; i < cgt_records_count(records.get()); ++i) {
      const char* grid = nullptr;
      check(cgt_records_get(records.get(), i, &grid, nullptr, nullptr));
      seeds.emplace_back(grid);
    }
    return seeds;
  }
  for (std::string line = first;; ) {
    const auto end = line.find_first_of("\t\r ");
    if (end != std::string::npos) line.resize(end);
    if (!line.empty()) seeds.push_back(line);
    if (!std::getline(in, line)) break;
  }
  if (seeds.empty()) throw DomainError{path + " contains no seeds"};
  return seeds;
}

struct GeneticArgs {
  std::string seeds_file;
  std::string output_path;
  cgt_genetic_config genetic{};
  SearchFlags flags{"2"};
  bool contains_hook = false;
};

int run_genetic(const GeneticArgs& a) {
  const std::vector<std::string> seeds = read_seeds(a.seeds_file);
  std::vector<const char*> seed_ptrs;
  for (const std::string& s : seeds) seed_ptrs.push_back(s.c_str());
  Context ctx = a.flags.context();
  cgt_search_config c = a.flags.config();
  cgt_records* raw = nullptr;
  check(cgt_genetic_search(ctx.get(), &c, &a.genetic, seed_ptrs.data(), seed_ptrs.size(), &raw));
  Records records(raw);
  check(cgt_records_write(records.get(), a.output_path.c_str()));
  std::cout << "archived " << cgt_records_count(records.get()) << " positions "
            << (a.flags.strictly_above ? ">" : ">=") << " " << a.flags.min_temperature << "\n";
  if (a.contains_hook) count_hooks(records.get());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial game values, thermographs and Domineering searches", "cgt-cli"};
  app.require_subcommand(1);
  CLI::App* dom = app.add_subcommand("domineering", "Domineering positions");
  dom->require_subcommand(1);

  ExhaustiveArgs ex;
  CLI::App* ex_cmd = dom->add_subcommand("exhaustive-search", "Search every position of a grid size");
  ex_cmd->add_option("--width", ex.width, "Grid width (1-8)")->required()->check(CLI::Range(1, 8));
  ex_cmd->add_option("--height", ex.height, "Grid height (1-8)")->required()->check(CLI::Range(1, 8));
  ex_cmd->add_option("--output-path", ex.output_path, "Results file to write")->required();
  ex.flags.add_to(ex_cmd);
  ex_cmd->add_flag("--no-spanning", ex.no_spanning, "Also keep positions whose empty cells miss a grid edge");
  ex_cmd->add_flag("--no-symmetry-dedup", ex.no_symmetry_dedup, "Keep every rotation and reflection");
  ex_cmd->add_option("--workers", ex.workers, "Worker threads")->check(CLI::PositiveNumber);
  ex_cmd->add_flag("--contains-hook", ex.contains_hook, "Report how many results contain the hook");

  LatexArgs lx;
  CLI::App* lx_cmd = dom->add_subcommand("latex-table", "Render a results file as a LaTeX table");
  lx_cmd->add_option("--in-file", lx.in_file, "Results file")->required();
  lx_cmd->add_option("--out-file", lx.out_file, "LaTeX file to write")->required();
  lx_cmd->add_option("--columns", lx.columns, "Positions per table row")->check(CLI::PositiveNumber);
  lx_cmd->add_option("--scale", lx.scale, "TikZ picture scale")->check(CLI::PositiveNumber);
  lx_cmd->add_flag("--no-header", lx.no_header, "Omit the repeated header row");

  EvaluateArgs ev;
  CLI::App* ev_cmd = dom->add_subcommand("evaluate", "Value and temperature of one position");
  auto* grid_opt = ev_cmd->add_option("--grid", ev.grid, "Rows of '.' and '#' separated by '|'");
  auto* stdin_opt = ev_cmd->add_flag("--stdin", ev.from_stdin, "Read the grid from standard input");
  grid_opt->excludes(stdin_opt);
  ev_cmd->add_option("--thermograph-method", ev.method, "Temperature computation: scaffold or direct")
      ->check(CLI::IsMember({"scaffold", "direct"}));

  FamilyArgs fa;
  CLI::App* fa_cmd = dom->add_subcommand("family-check", "Check the values of a family of positions");
  fa_cmd->add_option("--family", fa.family, "L, L+, L-, Lcup or DCL")
      ->required()
      ->check(CLI::IsMember({"L", "L+", "L-", "Lcup", "DCL"}));
  fa_cmd->add_option("--n-max", fa.n_max, "Largest n to check (default 5 for L families, 3 otherwise)")
      ->check(CLI::PositiveNumber);

  GeneticArgs ga;
  cgt_genetic_config_init(&ga.genetic);
  CLI::App* ga_cmd = dom->add_subcommand("genetic-search", "Mutate seed positions looking for hot ones");
  ga_cmd->add_option("--seeds-file", ga.seeds_file, "Results file or one grid per line")->required();
  ga_cmd->add_option("--output-path", ga.output_path, "Results file to write")->required();
  ga_cmd->add_option("--generations", ga.genetic.generations, "Generations to run")
      ->check(CLI::NonNegativeNumber);
  ga_cmd->add_option("--rng-seed", ga.genetic.rng_seed, "Random seed");
  ga_cmd->add_option("--mutations-per-child", ga.genetic.mutations_per_child, "Most cells toggled per child")
      ->check(CLI::PositiveNumber);
  ga_cmd->add_option("--population-cap", ga.genetic.population_cap, "Population size")
      ->check(CLI::PositiveNumber);
  ga.flags.add_to(ga_cmd);
  ga_cmd->add_flag("--contains-hook", ga.contains_hook, "Report how many results contain the hook");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (ex_cmd->parsed()) return run_exhaustive(ex);
    if (lx_cmd->parsed()) return run_latex(lx);
    if (ev_cmd->parsed()) {
      if (ev.grid.empty() && !ev.from_stdin) {
        std::cerr << "evaluate: one of --grid or --stdin is required\n" << ev_cmd->help();
        return kExitUsage;
      }
      return run_evaluate(ev);
    }
    if (fa_cmd->parsed()) return run_family(fa);
    if (ga_cmd->parsed()) return run_genetic(ga);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
