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

#include "bergeq/bergeq.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "bergeq/berge_search.h"
#include "bergeq/equilibria.h"
#include "bergeq/errors.h"
#include "bergeq/game.h"
#include "bergeq/game_io.h"

struct bergeq_game {
  bergeq::Game game;
};

struct bergeq_profile {
  bergeq::MixedProfile profile;
  std::string text;
};

struct bergeq_verdict {
  bergeq::EquilibriumVerdict verdict;
  std::string deficiency;
  std::vector<std::string> gaps;
  std::vector<int> witness;
  std::string witness_label;
};

struct bergeq_profile_list {
  std::vector<bergeq::PureProfile> profiles;
  std::vector<std::string> labels;
};

struct bergeq_certificate {
  bergeq::ExistenceCertificate cert;
  std::vector<std::string> graphs;
  std::string intersection;
  std::optional<std::string> witness;
};

struct bergeq_search_result {
  std::uint64_t grid_points = 0;
  std::vector<std::string> deficiencies;
  std::vector<std::string> profiles;
  std::optional<std::string> warning;
};

namespace {

thread_local std::string last_error;

// Runs `body`, mapping exceptions to status codes.
template <typename Body>
bergeq_status Guard(Body&& body) {
  try {
    last_error.clear();
    body();
    return BERGEQ_OK;
  } catch (const bergeq::InvalidArgument& e) {
    last_error = e.what();
    return BERGEQ_INVALID_ARGUMENT;
  } catch (const bergeq::ParseError& e) {
    last_error = e.what();
    return BERGEQ_PARSE_ERROR;
  } catch (const bergeq::FormatError& e) {
    last_error = e.what();
    return BERGEQ_FORMAT_ERROR;
  } catch (const bergeq::UnsupportedOperation& e) {
    last_error = e.what();
    return BERGEQ_UNSUPPORTED;
  } catch (const bergeq::IoError& e) {
    last_error = e.what();
    return BERGEQ_IO_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BERGEQ_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BERGEQ_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return BERGEQ_INTERNAL_ERROR;
  }
}

void Require(const void* p, const char* what) {
  if (p == nullptr) {
    throw bergeq::InvalidArgument(std::string(what) + " is NULL");
  }
}

char* Copy(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bergeq::PureProfile ToProfile(const int* profile, size_t length) {
  if (length > 0) Require(profile, "profile");
  return bergeq::PureProfile(profile, profile + length);
}

bergeq::EquilibriumKind ToKind(bergeq_kind kind) {
  switch (kind) {
    case BERGEQ_NASH:
      return bergeq::EquilibriumKind::kNash;
    case BERGEQ_BERGE:
      return bergeq::EquilibriumKind::kBerge;
  }
  throw bergeq::InvalidArgument("unknown equilibrium kind");
}

bergeq_game* Wrap(bergeq::Game game) {
  return new bergeq_game{std::move(game)};
}

}  // namespace

extern "C" {

const char* bergeq_version(void) { return "0.1.0"; }

const char* bergeq_last_error(void) { return last_error.c_str(); }

const char* bergeq_status_name(bergeq_status status) {
  switch (status) {
    case BERGEQ_OK:
      return "ok";
    case BERGEQ_INVALID_ARGUMENT:
      return "invalid argument";
    case BERGEQ_PARSE_ERROR:
      return "parse error";
    case BERGEQ_FORMAT_ERROR:
      return "format error";
    case BERGEQ_UNSUPPORTED:
      return "unsupported operation";
    case BERGEQ_IO_ERROR:
      return "i/o error";
    case BERGEQ_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown status";
}

void bergeq_string_free(char* text) { delete[] text; }

bergeq_status bergeq_game_parse(const char* document, bergeq_game** out) {
  return Guard([&] {
    Require(document, "document");
    Require(out, "out");
    *out = Wrap(bergeq::ParseGame(document));
  });
}

bergeq_status bergeq_game_load(const char* path, bergeq_game** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = Wrap(bergeq::LoadGame(path));
  });
}

bergeq_status bergeq_game_builtin(const char* name, bergeq_game** out) {
  return Guard([&] {
    Require(name, "name");
    Require(out, "out");
    *out = Wrap(bergeq::BuiltinGame(name));
  });
}

const char* bergeq_builtin_names(void) {
  static const std::string names = [] {
    std::string joined;
    for (const std::string& n : bergeq::BuiltinNames()) {
      joined += (joined.empty() ? "" : ",") + n;
    }
    return joined;
  }();
  return names.c_str();
}

bergeq_status bergeq_builtin_document(const char* name, char** out_document) {
  return Guard([&] {
    Require(name, "name");
    Require(out_document, "out_document");
    *out_document = Copy(bergeq::BuiltinDocument(name));
  });
}

bergeq_status bergeq_game_serialize(const bergeq_game* game,
                                    char** out_document) {
  return Guard([&] {
    Require(game, "game");
    Require(out_document, "out_document");
    *out_document = Copy(bergeq::SerializeGame(game->game));
  });
}

void bergeq_game_free(bergeq_game* game) { delete game; }

int bergeq_game_num_players(const bergeq_game* game) {
  return game == nullptr ? 0 : game->game.num_players();
}

int bergeq_game_num_strategies(const bergeq_game* game, int player) {
  if (game == nullptr || player < 0 || player >= game->game.num_players()) {
    return -1;
  }
  return game->game.num_strategies(player);
}

const char* bergeq_game_strategy_name(const bergeq_game* game, int player,
                                      int strategy) {
  if (bergeq_game_num_strategies(game, player) <= strategy || strategy < 0) {
    return nullptr;
  }
  return game->game.strategy_name(player, strategy).c_str();
}

bergeq_status bergeq_game_payoff(const bergeq_game* game, const int* profile,
                                 size_t length, int player,
                                 char** out_rational) {
  return Guard([&] {
    Require(game, "game");
    Require(out_rational, "out_rational");
    *out_rational = Copy(
        bergeq::Payoff(game->game, ToProfile(profile, length), player)
            .ToFractionString());
  });
}

bergeq_status bergeq_constant_sum(const bergeq_game* game, int* has_value,
                                  char** out_rational) {
  return Guard([&] {
    Require(game, "game");
    Require(has_value, "has_value");
    Require(out_rational, "out_rational");
    std::optional<bergeq::Rational> sum = bergeq::ConstantSum(game->game);
    *has_value = sum.has_value() ? 1 : 0;
    *out_rational = sum ? Copy(sum->ToFractionString()) : nullptr;
  });
}

bergeq_status bergeq_own_payoff_independent(const bergeq_game* game,
                                            int* flags, size_t length) {
  return Guard([&] {
    Require(game, "game");
    if (length != static_cast<size_t>(game->game.num_players())) {
      throw bergeq::InvalidArgument("flags buffer must hold one entry per "
                                    "player");
    }
    Require(flags, "flags");
    std::vector<bool> independent = bergeq::OwnPayoffIndependent(game->game);
    for (size_t i = 0; i < length; ++i) flags[i] = independent[i] ? 1 : 0;
  });
}

bergeq_status bergeq_is_pareto_optimal_pure(const bergeq_game* game,
                                             const int* profile, size_t length,
                                             int* out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = bergeq::IsParetoOptimalPure(game->game, ToProfile(profile, length))
               ? 1
               : 0;
  });
}

bergeq_status bergeq_game_swap_payoffs_2p(const bergeq_game* game,
                                          bergeq_game** out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = Wrap(bergeq::SwapPayoffs2p(game->game));
  });
}

bergeq_status bergeq_profile_parse(const bergeq_game* game, const char* spec,
                                   bergeq_profile** out) {
  return Guard([&] {
    Require(game, "game");
    Require(spec, "spec");
    Require(out, "out");
    bergeq::MixedProfile profile = bergeq::ParseProfileSpec(game->game, spec);
    std::string text = bergeq::FormatProfile(profile);
    *out = new bergeq_profile{std::move(profile), std::move(text)};
  });
}

bergeq_status bergeq_profile_pure(const bergeq_game* game, const int* profile,
                                  size_t length, bergeq_profile** out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    bergeq::MixedProfile mixed =
        bergeq::PointProfile(game->game, ToProfile(profile, length));
    std::string text = bergeq::FormatProfile(mixed);
    *out = new bergeq_profile{std::move(mixed), std::move(text)};
  });
}

const char* bergeq_profile_text(const bergeq_profile* profile) {
  return profile == nullptr ? nullptr : profile->text.c_str();
}

void bergeq_profile_free(bergeq_profile* profile) { delete profile; }

bergeq_status bergeq_expected_payoff(const bergeq_game* game,
                                     const bergeq_profile* profile,
                                     int player, char** out_rational) {
  return Guard([&] {
    Require(game, "game");
    Require(profile, "profile");
    Require(out_rational, "out_rational");
    *out_rational = Copy(
        bergeq::ExpectedPayoff(game->game, profile->profile, player)
            .ToFractionString());
  });
}

bergeq_status bergeq_check(const bergeq_game* game,
                           const bergeq_profile* profile, bergeq_kind kind,
                           bergeq_verdict** out) {
  return Guard([&] {
    Require(game, "game");
    Require(profile, "profile");
    Require(out, "out");
    auto result = std::make_unique<bergeq_verdict>();
    result->verdict = bergeq::Check(game->game, profile->profile, ToKind(kind));
    result->deficiency = result->verdict.deficiency.ToFractionString();
    for (const auto& gap : result->verdict.player_gaps) {
      result->gaps.push_back(gap.ToFractionString());
    }
    if (const auto* d =
            std::get_if<bergeq::PureDeviation>(&result->verdict.witness)) {
      result->witness = {d->strategy};
      result->witness_label = game->game.strategy_name(d->player, d->strategy);
    } else {
      const auto& c = std::get<bergeq::PureComplement>(result->verdict.witness);
      result->witness = c.co_strategies;
      result->witness_label = game->game.Label(c);
    }
    *out = result.release();
  });
}

int bergeq_verdict_is_equilibrium(const bergeq_verdict* verdict) {
  return verdict != nullptr && verdict->verdict.is_equilibrium ? 1 : 0;
}

const char* bergeq_verdict_deficiency(const bergeq_verdict* verdict) {
  return verdict == nullptr ? nullptr : verdict->deficiency.c_str();
}

const char* bergeq_verdict_gap(const bergeq_verdict* verdict, int player) {
  if (verdict == nullptr || player < 0 ||
      static_cast<size_t>(player) >= verdict->gaps.size()) {
    return nullptr;
  }
  return verdict->gaps[player].c_str();
}

int bergeq_verdict_witness_player(const bergeq_verdict* verdict) {
  return verdict == nullptr ? -1 : verdict->verdict.witness_player();
}

size_t bergeq_verdict_witness_size(const bergeq_verdict* verdict) {
  return verdict == nullptr ? 0 : verdict->witness.size();
}

int bergeq_verdict_witness_strategy(const bergeq_verdict* verdict, size_t k) {
  if (verdict == nullptr || k >= verdict->witness.size()) return -1;
  return verdict->witness[k];
}

const char* bergeq_verdict_witness_label(const bergeq_verdict* verdict) {
  return verdict == nullptr ? nullptr : verdict->witness_label.c_str();
}

void bergeq_verdict_free(bergeq_verdict* verdict) { delete verdict; }

bergeq_status bergeq_enumerate_pure(const bergeq_game* game, bergeq_kind kind,
                                    bergeq_profile_list** out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    auto list = std::make_unique<bergeq_profile_list>();
    list->profiles = ToKind(kind) == bergeq::EquilibriumKind::kNash
                         ? bergeq::EnumeratePureNash(game->game)
                         : bergeq::EnumeratePureBerge(game->game);
    for (const auto& s : list->profiles) {
      list->labels.push_back(game->game.Label(s));
    }
    *out = list.release();
  });
}

size_t bergeq_profile_list_size(const bergeq_profile_list* list) {
  return list == nullptr ? 0 : list->profiles.size();
}

bergeq_status bergeq_profile_list_get(const bergeq_profile_list* list,
                                      size_t index, int* out_profile,
                                      size_t length) {
  return Guard([&] {
    Require(list, "list");
    if (index >= list->profiles.size()) {
      throw bergeq::InvalidArgument("profile list index out of range");
    }
    const auto& s = list->profiles[index];
    if (length != s.size()) {
      throw bergeq::InvalidArgument("buffer must hold one entry per player");
    }
    Require(out_profile, "out_profile");
    std::copy(s.begin(), s.end(), out_profile);
  });
}

const char* bergeq_profile_list_label(const bergeq_profile_list* list,
                                      size_t index) {
  if (list == nullptr || index >= list->labels.size()) return nullptr;
  return list->labels[index].c_str();
}

void bergeq_profile_list_free(bergeq_profile_list* list) { delete list; }

bergeq_status bergeq_decide_berge_222(const bergeq_game* game,
                                      bergeq_certificate** out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    auto result = std::make_unique<bergeq_certificate>();
    result->cert = bergeq::DecideBergeExistenceOi222(game->game);
    for (const auto& g : result->cert.graphs) {
      result->graphs.push_back(g.ToString());
    }
    result->intersection = result->cert.intersection.ToString();
    if (result->cert.witness) {
      result->witness = bergeq::FormatProfile(*result->cert.witness);
    }
    *out = result.release();
  });
}

int bergeq_certificate_exists(const bergeq_certificate* cert) {
  return cert != nullptr && cert->cert.exists ? 1 : 0;
}

const char* bergeq_certificate_graph(const bergeq_certificate* cert,
                                     int player) {
  if (cert == nullptr || player < 0 ||
      static_cast<size_t>(player) >= cert->graphs.size()) {
    return nullptr;
  }
  return cert->graphs[player].c_str();
}

const char* bergeq_certificate_intersection(const bergeq_certificate* cert) {
  return cert == nullptr ? nullptr : cert->intersection.c_str();
}

const char* bergeq_certificate_witness(const bergeq_certificate* cert) {
  if (cert == nullptr || !cert->witness) return nullptr;
  return cert->witness->c_str();
}

size_t bergeq_certificate_conflict_count(const bergeq_certificate* cert) {
  return cert == nullptr ? 0 : cert->cert.conflicts.size();
}

int bergeq_certificate_conflict(const bergeq_certificate* cert, size_t index,
                                int* player_a, int* player_b, int* axis) {
  if (cert == nullptr || index >= cert->cert.conflicts.size()) return 0;
  const auto& c = cert->cert.conflicts[index];
  if (player_a != nullptr) *player_a = c.player_a;
  if (player_b != nullptr) *player_b = c.player_b;
  if (axis != nullptr) *axis = c.axis;
  return 1;
}

void bergeq_certificate_free(bergeq_certificate* cert) { delete cert; }

bergeq_status bergeq_bsg_sidecar_path(const char* csv_path, char** out_path) {
  return Guard([&] {
    Require(csv_path, "csv_path");
    Require(out_path, "out_path");
    *out_path = Copy(bergeq::SidecarPath(csv_path).string());
  });
}

bergeq_status bergeq_export_best_support_graphs(const bergeq_game* game,
                                                const char* csv_path,
                                                const char* json_path) {
  return Guard([&] {
    Require(game, "game");
    Require(csv_path, "csv_path");
    Require(json_path, "json_path");
    bergeq::BestSupportGraphExport data =
        bergeq::ExportBestSupportGraphs(game->game);
    bergeq::WriteTextFile(csv_path, data.csv);
    bergeq::WriteTextFile(json_path, data.json);
  });
}

bergeq_status bergeq_grid_search(const bergeq_game* game, int resolution,
                                 int top, int threads,
                                 bergeq_search_result** out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    bergeq::GridSearchResult found =
        bergeq::GridSearchMinDeficiency(game->game, resolution, top, threads);
    auto result = std::make_unique<bergeq_search_result>();
    result->grid_points = found.grid_points;
    result->warning = found.warning;
    for (const auto& point : found.best) {
      result->deficiencies.push_back(point.deficiency.ToFractionString());
      result->profiles.push_back(bergeq::FormatProfile(point.profile));
    }
    *out = result.release();
  });
}

uint64_t bergeq_search_grid_points(const bergeq_search_result* result) {
  return result == nullptr ? 0 : result->grid_points;
}

size_t bergeq_search_size(const bergeq_search_result* result) {
  return result == nullptr ? 0 : result->profiles.size();
}

const char* bergeq_search_deficiency(const bergeq_search_result* result,
                                     size_t index) {
  if (result == nullptr || index >= result->deficiencies.size()) {
    return nullptr;
  }
  return result->deficiencies[index].c_str();
}

const char* bergeq_search_profile(const bergeq_search_result* result,
                                  size_t index) {
  if (result == nullptr || index >= result->profiles.size()) return nullptr;
  return result->profiles[index].c_str();
}

const char* bergeq_search_warning(const bergeq_search_result* result) {
  if (result == nullptr || !result->warning) return nullptr;
  return result->warning->c_str();
}

void bergeq_search_free(bergeq_search_result* result) { delete result; }

}  // extern "C"
