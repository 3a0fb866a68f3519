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

#ifndef CGT_CGT_H_
#define CGT_CGT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CGT_BUILDING_LIBRARY)
#define CGT_API __attribute__((visibility("default")))
#else
#define CGT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cgt_status {
  CGT_OK = 0,
  CGT_ERR_INVALID_ARGUMENT = 1, /* null pointer, out-of-range size or option */
  CGT_ERR_PARSE = 2,            /* malformed value, grid or fraction text */
  CGT_ERR_FORMAT = 3,           /* malformed results file */
  CGT_ERR_IO = 4,
  CGT_ERR_OUT_OF_MEMORY = 5,
  CGT_ERR_INTERNAL = 6
} cgt_status;

typedef enum cgt_thermograph_method {
  CGT_THERMOGRAPH_SCAFFOLD = 0,
  CGT_THERMOGRAPH_DIRECT = 1
} cgt_thermograph_method;

/* Message for the last failed call on this thread; "" if none. */
CGT_API const char* cgt_last_error(void);
CGT_API const char* cgt_status_name(cgt_status status);
/* Frees strings returned through char** out-parameters. */
CGT_API void cgt_string_free(char* s);

/* A value universe with its caches. A context may be used by one caller
 * thread at a time; searches spread work over their own workers. */
typedef struct cgt_context cgt_context;

CGT_API cgt_status cgt_context_create(cgt_context** out);
CGT_API void cgt_context_destroy(cgt_context* ctx);
CGT_API cgt_status cgt_context_stats(const cgt_context* ctx, size_t* game_nodes, size_t* cached_positions);
/* Bounds the number of cached position values; 0 means unbounded. Defaults
 * to CGT_DEFAULT_CACHED_POSITIONS. */
#define CGT_DEFAULT_CACHED_POSITIONS ((size_t)1 << 23)
CGT_API cgt_status cgt_context_set_cache_limit(cgt_context* ctx, size_t positions);

/* Values in text form, e.g. "15/8", "2*", "±(2*)", "{2|1}". */
CGT_API cgt_status cgt_value_canonical(cgt_context* ctx, const char* value, char** out);
CGT_API cgt_status cgt_value_temperature(cgt_context* ctx, const char* value, cgt_thermograph_method method,
                                         char** out);
CGT_API cgt_status cgt_value_mast(cgt_context* ctx, const char* value, char** out);

/* Evaluation of one board given as rows of '.' and '#' joined by '|'. Boards
 * may have up to 8 columns and 32 rows. */
typedef struct cgt_evaluation cgt_evaluation;

CGT_API cgt_status cgt_evaluate(cgt_context* ctx, const char* grid, cgt_thermograph_method method,
                                cgt_evaluation** out);
CGT_API const char* cgt_evaluation_value(const cgt_evaluation* e);
CGT_API const char* cgt_evaluation_temperature(const cgt_evaluation* e);
CGT_API const char* cgt_evaluation_mast(const cgt_evaluation* e);
CGT_API size_t cgt_evaluation_component_count(const cgt_evaluation* e);
/* Borrowed strings, valid until the evaluation is destroyed. */
CGT_API cgt_status cgt_evaluation_component(const cgt_evaluation* e, size_t index, const char** grid,
                                            const char** value, const char** temperature);
CGT_API void cgt_evaluation_destroy(cgt_evaluation* e);

/* Does the board contain the 2x5 hook in any orientation? */
CGT_API cgt_status cgt_grid_contains_hook(const char* grid, int* out);

typedef enum cgt_symmetry {
  CGT_SYMMETRY_DIHEDRAL = 0,        /* all eight rotations and reflections */
  CGT_SYMMETRY_VALUE_PRESERVING = 1 /* identity, both flips, half turn */
} cgt_symmetry;

typedef struct cgt_search_config {
  int width;
  int height;
  const char* min_temperature; /* fraction such as "7/4"; NULL keeps all */
  int strict_threshold;        /* keep only temperatures above the minimum */
  int max_empty_tiles;         /* negative: no limit */
  int allow_decomposable;
  int require_spanning;
  int dedup_symmetry;
  cgt_symmetry symmetry;
  int workers;
  cgt_thermograph_method method;
} cgt_search_config;

typedef struct cgt_genetic_config {
  int generations;
  int mutations_per_child;
  int population_cap;
  uint64_t rng_seed;
} cgt_genetic_config;

CGT_API void cgt_search_config_init(cgt_search_config* config);
CGT_API void cgt_genetic_config_init(cgt_genetic_config* config);

/* Search results: (grid, value, temperature) records of one grid size. */
typedef struct cgt_records cgt_records;

CGT_API cgt_status cgt_exhaustive_search(cgt_context* ctx, const cgt_search_config* config, cgt_records** out);
CGT_API cgt_status cgt_genetic_search(cgt_context* ctx, const cgt_search_config* config,
                                      const cgt_genetic_config* genetic, const char* const* seeds,
                                      size_t seed_count, cgt_records** out);

CGT_API cgt_status cgt_records_read(const char* path, cgt_records** out);
CGT_API cgt_status cgt_records_write(const cgt_records* records, const char* path);
CGT_API size_t cgt_records_count(const cgt_records* records);
CGT_API int cgt_records_width(const cgt_records* records);
CGT_API int cgt_records_height(const cgt_records* records);
/* Borrowed strings, valid until the records are destroyed. */
CGT_API cgt_status cgt_records_get(const cgt_records* records, size_t index, const char** grid,
                                   const char** value, const char** temperature);
CGT_API void cgt_records_destroy(cgt_records* records);

/* Writes a longtabu/TikZ table of the records. */
CGT_API cgt_status cgt_latex_table(const cgt_records* records, int columns, double scale, int include_header,
                                   char** out);

/* Family names: "L", "L+", "L-", "Lcup", "DCL". */
typedef struct cgt_family_report cgt_family_report;

CGT_API cgt_status cgt_family_check(cgt_context* ctx, const char* family, int n_max, cgt_family_report** out);
CGT_API size_t cgt_family_report_count(const cgt_family_report* report);
/* temperature is NULL for families whose temperature is not checked. */
CGT_API cgt_status cgt_family_report_get(const cgt_family_report* report, size_t index, int* n,
                                         const char** grid, const char** expected, const char** computed,
                                         const char** temperature, int* pass);
CGT_API void cgt_family_report_destroy(cgt_family_report* report);

#ifdef __cplusplus
}
#endif

#endif /* CGT_CGT_H_ */
