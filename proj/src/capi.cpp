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

#include "cgt/cgt.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "cgt/evaluator.hpp"
#include "cgt/families.hpp"
#include "cgt/game_store.hpp"
#include "cgt/grid.hpp"
#include "cgt/latex.hpp"
#include "cgt/search.hpp"
#include "cgt/thermograph.hpp"
#include "cgt/value_text.hpp"

namespace dom = cgt::domineering;

struct cgt_context {
  cgt::GameStore store;
  dom::TranspositionTable table{CGT_DEFAULT_CACHED_POSITIONS};
  cgt::Thermography thermography{store};
  dom::Evaluator evaluator{store, table};
  dom::TallEvaluator tall{evaluator};

  dom::SearchContext search() { return {store, table, thermography}; }
};

struct cgt_evaluation {
  struct Part {
    std::string grid;
    std::string value;
    std::string temperature;
  };
  std::string value;
  std::string temperature;
  std::string mast;
  std::vector<Part> components;
};

struct cgt_records {
  dom::RecordsFile file;
  std::vector<std::string> grids;
  std::vector<std::string> temperatures;

  explicit cgt_records(dom::RecordsFile f) : file(std::move(f)) {
    for (const auto& r : file.records) {
      grids.push_back(dom::display_grid(r.position));
      temperatures.push_back(r.temperature.to_string());
    }
  }
};

struct cgt_family_report {
  struct Row {
    int n;
    std::string grid;
    std::string expected;
    std::string computed;
    std::string temperature;
    bool has_temperature;
    bool pass;
  };
  std::vector<Row> rows;
};

namespace {

thread_local std::string last_error;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed grid or number text supplied by the caller.
class TextError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Parse>
auto parse_text(Parse&& parse) {
  try {
    return parse();
  } catch (const std::invalid_argument& e) {
    throw TextError(e.what());
  }
}

cgt_status fail(cgt_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
cgt_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return CGT_OK;
  } catch (const cgt::ParseError& e) {
    return fail(CGT_ERR_PARSE, e.what());
  } catch (const dom::RecordsError& e) {
    return fail(CGT_ERR_FORMAT, e.what());
  } catch (const IoError& e) {
    return fail(CGT_ERR_IO, e.what());
  } catch (const TextError& e) {
    return fail(CGT_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CGT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CGT_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(CGT_ERR_INTERNAL, e.what());
  }
}

cgt_status null_argument(const char* name) {
  return fail(CGT_ERR_INVALID_ARGUMENT, std::string(name) + " must not be null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cgt::ThermographMethod to_method(cgt_thermograph_method m) {
  switch (m) {
    case CGT_THERMOGRAPH_SCAFFOLD:
      return cgt::ThermographMethod::kScaffold;
    case CGT_THERMOGRAPH_DIRECT:
      return cgt::ThermographMethod::kDirect;
  }
  throw std::invalid_argument("unknown thermograph method");
}

dom::SearchConfig to_config(const cgt_search_config& c) {
  dom::SearchConfig config;
  config.width = c.width;
  config.height = c.height;
  if (c.min_temperature) {
    auto t = cgt::Dyadic::parse(c.min_temperature);
    if (!t) {
      throw TextError(std::string("minimum temperature \"") + c.min_temperature +
                      "\" is not a fraction with a power-of-two denominator");
    }
    config.min_temperature = *t;
  }
  config.strict_threshold = c.strict_threshold != 0;
  if (c.max_empty_tiles >= 0) config.max_empty_tiles = c.max_empty_tiles;
  config.allow_decomposable = c.allow_decomposable != 0;
  config.require_spanning = c.require_spanning != 0;
  config.dedup_symmetry = c.dedup_symmetry != 0;
  switch (c.symmetry) {
    case CGT_SYMMETRY_DIHEDRAL:
      config.symmetry = dom::SymmetryGroup::kDihedral;
      break;
    case CGT_SYMMETRY_VALUE_PRESERVING:
      config.symmetry = dom::SymmetryGroup::kValuePreserving;
      break;
    default:
      throw std::invalid_argument("unknown symmetry group");
  }
  config.worker_count = c.workers;
  config.method = to_method(c.method);
  return config;
}

}  // namespace

extern "C" {

const char* cgt_last_error(void) { return last_error.c_str(); }

const char* cgt_status_name(cgt_status status) {
  switch (status) {
    case CGT_OK:
      return "ok";
    case CGT_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case CGT_ERR_PARSE:
      return "parse error";
    case CGT_ERR_FORMAT:
      return "format error";
    case CGT_ERR_IO:
      return "I/O error";
    case CGT_ERR_OUT_OF_MEMORY:
      return "out of memory";
    case CGT_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void cgt_string_free(char* s) { std::free(s); }

cgt_status cgt_context_create(cgt_context** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new cgt_context(); });
}

void cgt_context_destroy(cgt_context* ctx) { delete ctx; }

cgt_status cgt_context_stats(const cgt_context* ctx, size_t* game_nodes, size_t* cached_positions) {
  if (!ctx) return null_argument("ctx");
  return guarded([&] {
    if (game_nodes) *game_nodes = ctx->store.stats().nodes;
    if (cached_positions) *cached_positions = ctx->table.size();
  });
}

cgt_status cgt_context_set_cache_limit(cgt_context* ctx, size_t positions) {
  if (!ctx) return null_argument("ctx");
  return guarded([&] { ctx->table.set_capacity(positions); });
}

cgt_status cgt_value_canonical(cgt_context* ctx, const char* value, char** out) {
  if (!ctx || !value || !out) return null_argument("ctx, value and out");
  return guarded([&] { *out = copy_string(cgt::display_value(ctx->store, cgt::parse_value(ctx->store, value))); });
}

cgt_status cgt_value_temperature(cgt_context* ctx, const char* value, cgt_thermograph_method method, char** out) {
  if (!ctx || !value || !out) return null_argument("ctx, value and out");
  return guarded([&] {
    const cgt::GameId g = cgt::parse_value(ctx->store, value);
    *out = copy_string(ctx->thermography.temperature(g, to_method(method)).to_string());
  });
}

cgt_status cgt_value_mast(cgt_context* ctx, const char* value, char** out) {
  if (!ctx || !value || !out) return null_argument("ctx, value and out");
  return guarded([&] {
    const cgt::GameId g = cgt::parse_value(ctx->store, value);
    *out = copy_string(ctx->thermography.mast_value(g).to_string());
  });
}

cgt_status cgt_evaluate(cgt_context* ctx, const char* grid, cgt_thermograph_method method, cgt_evaluation** out) {
  if (!ctx || !grid || !out) return null_argument("ctx, grid and out");
  return guarded([&] {
    const dom::TallBoard board = parse_text([&] { return dom::TallBoard::parse(grid); });
    const cgt::ThermographMethod m = to_method(method);
    auto e = std::make_unique<cgt_evaluation>();
    for (const dom::TallBoard& part : dom::decompose(board)) {
      const cgt::GameId g = ctx->tall.evaluate(part);
      e->components.push_back({part.display(), cgt::display_value(ctx->store, g),
                               ctx->thermography.temperature(g, m).to_string()});
    }
    const cgt::GameId total = ctx->tall.evaluate(board);
    e->value = cgt::display_value(ctx->store, total);
    e->temperature = ctx->thermography.temperature(total, m).to_string();
    e->mast = ctx->thermography.mast_value(total, m).to_string();
    *out = e.release();
  });
}

const char* cgt_evaluation_value(const cgt_evaluation* e) { return e ? e->value.c_str() : ""; }
const char* cgt_evaluation_temperature(const cgt_evaluation* e) { return e ? e->temperature.c_str() : ""; }
const char* cgt_evaluation_mast(const cgt_evaluation* e) { return e ? e->mast.c_str() : ""; }
size_t cgt_evaluation_component_count(const cgt_evaluation* e) { return e ? e->components.size() : 0; }

cgt_status cgt_evaluation_component(const cgt_evaluation* e, size_t index, const char** grid, const char** value,
                                    const char** temperature) {
  if (!e) return null_argument("evaluation");
  if (index >= e->components.size()) return fail(CGT_ERR_INVALID_ARGUMENT, "component index out of range");
  const auto& part = e->components[index];
  if (grid) *grid = part.grid.c_str();
  if (value) *value = part.value.c_str();
  if (temperature) *temperature = part.temperature.c_str();
  return CGT_OK;
}

void cgt_evaluation_destroy(cgt_evaluation* e) { delete e; }

cgt_status cgt_grid_contains_hook(const char* grid, int* out) {
  if (!grid || !out) return null_argument("grid and out");
  return guarded([&] { *out = dom::contains_hook(parse_text([&] { return dom::parse_grid(grid); })) ? 1 : 0; });
}

void cgt_search_config_init(cgt_search_config* config) {
  if (!config) return;
  *config = cgt_search_config{};
  config->max_empty_tiles = -1;
  config->require_spanning = 1;
  config->dedup_symmetry = 1;
  config->symmetry = CGT_SYMMETRY_DIHEDRAL;
  config->workers = 1;
  config->method = CGT_THERMOGRAPH_SCAFFOLD;
}

void cgt_genetic_config_init(cgt_genetic_config* config) {
  if (!config) return;
  const dom::GeneticConfig defaults;
  config->generations = defaults.generations;
  config->mutations_per_child = defaults.mutations_per_child;
  config->population_cap = defaults.population_cap;
  config->rng_seed = defaults.rng_seed;
}

cgt_status cgt_exhaustive_search(cgt_context* ctx, const cgt_search_config* config, cgt_records** out) {
  if (!ctx || !config || !out) return null_argument("ctx, config and out");
  return guarded([&] {
    const dom::SearchConfig c = to_config(*config);
    auto records = dom::exhaustive_search(c, ctx->search());
    *out = new cgt_records(dom::RecordsFile{c.width, c.height, std::move(records)});
  });
}

cgt_status cgt_genetic_search(cgt_context* ctx, const cgt_search_config* config, const cgt_genetic_config* genetic,
                              const char* const* seeds, size_t seed_count, cgt_records** out) {
  if (!ctx || !config || !genetic || !out || (!seeds && seed_count)) {
    return null_argument("ctx, config, genetic, seeds and out");
  }
  return guarded([&] {
    dom::SearchConfig c = to_config(*config);
    std::vector<dom::GridPosition> positions;
    for (size_t i = 0; i < seed_count; ++i) positions.push_back(parse_text([&] { return dom::parse_grid(seeds[i]); }));
    dom::GeneticConfig g;
    g.generations = genetic->generations;
    g.mutations_per_child = genetic->mutations_per_child;
    g.population_cap = genetic->population_cap;
    g.rng_seed = genetic->rng_seed;
    auto records = dom::genetic_search(c, positions, g, ctx->search());
    *out = new cgt_records(
        dom::RecordsFile{positions.front().width(), positions.front().height(), std::move(records)});
  });
}

cgt_status cgt_records_read(const char* path, cgt_records** out) {
  if (!path || !out) return null_argument("path and out");
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(std::string("cannot open ") + path);
    *out = new cgt_records(dom::read_records(in));
  });
}

cgt_status cgt_records_write(const cgt_records* records, const char* path) {
  if (!records || !path) return null_argument("records and path");
  return guarded([&] {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError(std::string("cannot open ") + path + " for writing");
    dom::write_records(file, records->file);
    file.flush();
    if (!file) throw IoError(std::string("failed writing ") + path);
  });
}

size_t cgt_records_count(const cgt_records* records) { return records ? records->file.records.size() : 0; }
int cgt_records_width(const cgt_records* records) { return records ? records->file.width : 0; }
int cgt_records_height(const cgt_records* records) { return records ? records->file.height : 0; }

cgt_status cgt_records_get(const cgt_records* records, size_t index, const char** grid, const char** value,
                           const char** temperature) {
  if (!records) return null_argument("records");
  if (index >= records->file.records.size()) return fail(CGT_ERR_INVALID_ARGUMENT, "record index out of range");
  if (grid) *grid = records->grids[index].c_str();
  if (value) *value = records->file.records[index].value.c_str();
  if (temperature) *temperature = records->temperatures[index].c_str();
  return CGT_OK;
}

void cgt_records_destroy(cgt_records* records) { delete records; }

cgt_status cgt_latex_table(const cgt_records* records, int columns, double scale, int include_header, char** out) {
  if (!records || !out) return null_argument("records and out");
  return guarded([&] {
    dom::TableOptions options;
    options.columns = columns;
    options.tikz_scale = scale;
    options.include_header = include_header != 0;
    *out = copy_string(dom::emit_table(records->file.records, options));
  });
}

cgt_status cgt_family_check(cgt_context* ctx, const char* family, int n_max, cgt_family_report** out) {
  if (!ctx || !family || !out) return null_argument("ctx, family and out");
  return guarded([&] {
    const auto kind = dom::parse_family(family);
    if (!kind) throw std::invalid_argument(std::string("unknown family \"") + family + "\"");
    if (n_max < 1) throw std::invalid_argument("n-max must be at least 1");
    auto report = std::make_unique<cgt_family_report>();
    for (const dom::FamilyCheck& c : dom::check_family(*kind, n_max, ctx->evaluator, ctx->thermography)) {
      report->rows.push_back({c.n, dom::build_family(c.kind, c.n).display(), c.expected, c.computed,
                              c.temperature ? c.temperature->to_string() : "", c.temperature.has_value(), c.pass});
    }
    *out = report.release();
  });
}

size_t cgt_family_report_count(const cgt_family_report* report) { return report ? report->rows.size() : 0; }

cgt_status cgt_family_report_get(const cgt_family_report* report, size_t index, int* n, const char** grid,
                                 const char** expected, const char** computed, const char** temperature, int* pass) {
  if (!report) return null_argument("report");
  if (index >= report->rows.size()) return fail(CGT_ERR_INVALID_ARGUMENT, "report index out of range");
  const auto& row = report->rows[index];
  if (n) *n = row.n;
  if (grid) *grid = row.grid.c_str();
  if (expected) *expected = row.expected.c_str();
  if (computed) *computed = row.computed.c_str();
  if (temperature) *temperature = row.has_temperature ? row.temperature.c_str() : nullptr;
  if (pass) *pass = row.pass ? 1 : 0;
  return CGT_OK;
}

void cgt_family_report_destroy(cgt_family_report* report) { delete report; }

}  // extern "C"
