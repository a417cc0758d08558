// Copyright 2026 The bergeq Authors
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

/*
 * C interface to the bergeq library.
 *
 * All objects are opaque handles released with their matching *_free
 * function. Functions returning bergeq_status report failures through the
 * code and a message available from bergeq_last_error() on the same thread.
 * Rationals cross the boundary as strings "num/den" (always with a
 * denominator). Strings returned as `char*` are owned by the caller and
 * released with bergeq_string_free(); `const char*` results are owned by the
 * handle they came from and stay valid until it is freed.
 *
 * Players, strategies and coordinates are 0-based.
 */
#ifndef BERGEQ_BERGEQ_H_
#define BERGEQ_BERGEQ_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BERGEQ_BUILDING_LIBRARY)
#    define BERGEQ_API __declspec(dllexport)
#  else
#    define BERGEQ_API __declspec(dllimport)
#  endif
#else
#  define BERGEQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bergeq_status {
  BERGEQ_OK = 0,
  BERGEQ_INVALID_ARGUMENT = 1,
  BERGEQ_PARSE_ERROR = 2,
  BERGEQ_FORMAT_ERROR = 3,
  BERGEQ_UNSUPPORTED = 4,
  BERGEQ_IO_ERROR = 5,
  BERGEQ_INTERNAL_ERROR = 6
} bergeq_status;

typedef enum bergeq_kind { BERGEQ_NASH = 0, BERGEQ_BERGE = 1 } bergeq_kind;

typedef struct bergeq_game bergeq_game;
typedef struct bergeq_profile bergeq_profile;
typedef struct bergeq_verdict bergeq_verdict;
typedef struct bergeq_profile_list bergeq_profile_list;
typedef struct bergeq_certificate bergeq_certificate;
typedef struct bergeq_search_result bergeq_search_result;

BERGEQ_API const char* bergeq_version(void);
/* Message of the last failed call on this thread; "" if none. */
BERGEQ_API const char* bergeq_last_error(void);
BERGEQ_API const char* bergeq_status_name(bergeq_status status);
BERGEQ_API void bergeq_string_free(char* text);

/* Games */
BERGEQ_API bergeq_status bergeq_game_parse(const char* document,
                                           bergeq_game** out);
BERGEQ_API bergeq_status bergeq_game_load(const char* path, bergeq_game** out);
BERGEQ_API bergeq_status bergeq_game_builtin(const char* name,
                                             bergeq_game** out);
/* Comma-separated list of builtin names. */
BERGEQ_API const char* bergeq_builtin_names(void);
BERGEQ_API bergeq_status bergeq_builtin_document(const char* name,
                                                 char** out_document);
BERGEQ_API bergeq_status bergeq_game_serialize(const bergeq_game* game,
                                               char** out_document);
BERGEQ_API void bergeq_game_free(bergeq_game* game);

BERGEQ_API int bergeq_game_num_players(const bergeq_game* game);
/* -1 for an invalid player. */
BERGEQ_API int bergeq_game_num_strategies(const bergeq_game* game, int player);
/* NULL for invalid indices. */
BERGEQ_API const char* bergeq_game_strategy_name(const bergeq_game* game,
                                                 int player, int strategy);
BERGEQ_API bergeq_status bergeq_game_payoff(const bergeq_game* game,
                                            const int* profile, size_t length,
                                            int player, char** out_rational);

/* Structure */
/* *has_value is set to 0 when payoff sums differ; *out_rational is then
 * NULL. */
BERGEQ_API bergeq_status bergeq_constant_sum(const bergeq_game* game,
                                             int* has_value,
                                             char** out_rational);
/* Writes one 0/1 flag per player into flags[0..length). */
BERGEQ_API bergeq_status bergeq_own_payoff_independent(
    const bergeq_game* game, int* flags, size_t length);
BERGEQ_API bergeq_status bergeq_is_pareto_optimal_pure(
    const bergeq_game* game, const int* profile, size_t length, int* out);
/* BERGEQ_UNSUPPORTED unless the game has two players. */
BERGEQ_API bergeq_status bergeq_game_swap_payoffs_2p(const bergeq_game* game,
                                                     bergeq_game** out);

/* Mixed profiles */
/* spec: "uniform" or a JSON array of per-player probability vectors. */
BERGEQ_API bergeq_status bergeq_profile_parse(const bergeq_game* game,
                                              const char* spec,
                                              bergeq_profile** out);
BERGEQ_API bergeq_status bergeq_profile_pure(const bergeq_game* game,
                                             const int* profile,
                                             size_t length,
                                             bergeq_profile** out);
/* JSON array of "num/den" strings, accepted by bergeq_profile_parse. */
BERGEQ_API const char* bergeq_profile_text(const bergeq_profile* profile);
BERGEQ_API void bergeq_profile_free(bergeq_profile* profile);
BERGEQ_API bergeq_status bergeq_expected_payoff(const bergeq_game* game,
                                                const bergeq_profile* profile,
                                                int player,
                                                char** out_rational);

/* Equilibrium checks */
BERGEQ_API bergeq_status bergeq_check(const bergeq_game* game,
                                      const bergeq_profile* profile,
                                      bergeq_kind kind, bergeq_verdict** out);
BERGEQ_API int bergeq_verdict_is_equilibrium(const bergeq_verdict* verdict);
BERGEQ_API const char* bergeq_verdict_deficiency(const bergeq_verdict* verdict);
/* Gap of one player; NULL for an invalid player. */
BERGEQ_API const char* bergeq_verdict_gap(const bergeq_verdict* verdict,
                                          int player);
BERGEQ_API int bergeq_verdict_witness_player(const bergeq_verdict* verdict);
/* Nash: one entry, the deviation. Berge: the co-players' strategies in
 * increasing player order. */
BERGEQ_API size_t bergeq_verdict_witness_size(const bergeq_verdict* verdict);
BERGEQ_API int bergeq_verdict_witness_strategy(const bergeq_verdict* verdict,
                                               size_t k);
/* Witness strategies by name, e.g. "(B1,C1)" or "A2". */
BERGEQ_API const char* bergeq_verdict_witness_label(
    const bergeq_verdict* verdict);
BERGEQ_API void bergeq_verdict_free(bergeq_verdict* verdict);

/* Pure equilibria, lexicographic order */
BERGEQ_API bergeq_status bergeq_enumerate_pure(const bergeq_game* game,
                                               bergeq_kind kind,
                                               bergeq_profile_list** out);
BERGEQ_API size_t bergeq_profile_list_size(const bergeq_profile_list* list);
BERGEQ_API bergeq_status bergeq_profile_list_get(
    const bergeq_profile_list* list, size_t index, int* out_profile,
    size_t length);
/* "(A1,B1,C1)"; NULL for an invalid index. */
BERGEQ_API const char* bergeq_profile_list_label(
    const bergeq_profile_list* list, size_t index);
BERGEQ_API void bergeq_profile_list_free(bergeq_profile_list* list);

/* Exact Berge existence for own-payoff-independent 2x2x2 games.
 * Coordinates are (p, q, r) = first-strategy probabilities. */
BERGEQ_API bergeq_status bergeq_decide_berge_222(const bergeq_game* game,
                                                 bergeq_certificate** out);
BERGEQ_API int bergeq_certificate_exists(const bergeq_certificate* cert);
/* Faces as "{(*,1,1)}"; NULL for an invalid player. */
BERGEQ_API const char* bergeq_certificate_graph(const bergeq_certificate* cert,
                                                int player);
BERGEQ_API const char* bergeq_certificate_intersection(
    const bergeq_certificate* cert);
/* Profile text, or NULL when no equilibrium exists. */
BERGEQ_API const char* bergeq_certificate_witness(
    const bergeq_certificate* cert);
BERGEQ_API size_t bergeq_certificate_conflict_count(
    const bergeq_certificate* cert);
/* Returns 0 for an invalid index. */
BERGEQ_API int bergeq_certificate_conflict(const bergeq_certificate* cert,
                                           size_t index, int* player_a,
                                           int* player_b, int* axis);
BERGEQ_API void bergeq_certificate_free(bergeq_certificate* cert);

/* Writes the sampled graph CSV and the exact JSON sidecar. */
/* Default sidecar path for a CSV path (extension replaced by .json). */
BERGEQ_API bergeq_status bergeq_bsg_sidecar_path(const char* csv_path,
                                                 char** out_path);
BERGEQ_API bergeq_status bergeq_export_best_support_graphs(
    const bergeq_game* game, const char* csv_path, const char* json_path);

/* Berge deficiency grid search. threads = 0 uses all cores. */
BERGEQ_API bergeq_status bergeq_grid_search(const bergeq_game* game,
                                            int resolution, int top,
                                            int threads,
                                            bergeq_search_result** out);
BERGEQ_API uint64_t bergeq_search_grid_points(
    const bergeq_search_result* result);
BERGEQ_API size_t bergeq_search_size(const bergeq_search_result* result);
BERGEQ_API const char* bergeq_search_deficiency(
    const bergeq_search_result* result, size_t index);
BERGEQ_API const char* bergeq_search_profile(
    const bergeq_search_result* result, size_t index);
/* NULL when the grid is small enough. */
BERGEQ_API const char* bergeq_search_warning(
    const bergeq_search_result* result);
BERGEQ_API void bergeq_search_free(bergeq_search_result* result);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* BERGEQ_BERGEQ_H_ */
