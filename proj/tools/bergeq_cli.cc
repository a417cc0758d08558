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

// bergeq: command-line front end over the C API.
//
// Exit codes: 0 affirmative, 3 negative verdict, 2 unsupported game,
// 1 input error.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bergeq/bergeq.h"

namespace {

constexpr int kExitAffirmative = 0;
constexpr int kExitInputError = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitNegative = 3;

constexpr const char* kAxisNames[] = {"p", "q", "r"};

// Thrown to unwind with an exit code once a message has been printed.
struct Exit {
  int code;
};

void Ensure(bergeq_status status) {
  if (status == BERGEQ_OK) return;
  std::cerr << "error: " << bergeq_last_error() << "\n";
  throw Exit{status == BERGEQ_UNSUPPORTED ? kExitUnsupported
                                          : kExitInputError};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GamePtr = std::unique_ptr<bergeq_game, Deleter<bergeq_game, bergeq_game_free>>;
using ProfilePtr =
    std::unique_ptr<bergeq_profile, Deleter<bergeq_profile, bergeq_profile_free>>;
using VerdictPtr =
    std::unique_ptr<bergeq_verdict, Deleter<bergeq_verdict, bergeq_verdict_free>>;
using ListPtr = std::unique_ptr<bergeq_profile_list,
                                Deleter<bergeq_profile_list, bergeq_profile_list_free>>;
using CertPtr = std::unique_ptr<bergeq_certificate,
                                Deleter<bergeq_certificate, bergeq_certificate_free>>;
using SearchPtr = std::unique_ptr<bergeq_search_result,
                                  Deleter<bergeq_search_result, bergeq_search_free>>;

std::string TakeString(char* text) {
  std::string out = text == nullptr ? "" : text;
  bergeq_string_free(text);
  return out;
}

// FILE is a path, or "builtin:NAME" for a shipped game.
GamePtr Load(const std::string& file) {
  bergeq_game* game = nullptr;
  const std::string prefix = "builtin:";
  if (file.rfind(prefix, 0) == 0) {
    Ensure(bergeq_game_builtin(file.substr(prefix.size()).c_str(), &game));
  } else {
    Ensure(bergeq_game_load(file.c_str(), &game));
  }
  return GamePtr(game);
}

int RunInfo(const std::string& file) {
  GamePtr game = Load(file);
  const int n = bergeq_game_num_players(game.get());
  std::cout << "players: " << n << "\n";
  for (int i = 0; i < n; ++i) {
    const int m = bergeq_game_num_strategies(game.get(), i);
    std::cout << "player " << i + 1 << ": " << m << " strategies (";
    for (int s = 0; s < m; ++s) {
      std::cout << (s ? ", " : "") << bergeq_game_strategy_name(game.get(), i, s);
    }
    std::cout << ")\n";
  }
  int has_sum = 0;
  char* sum = nullptr;
  Ensure(bergeq_constant_sum(game.get(), &has_sum, &sum));
  std::cout << "constant_sum: " << (has_sum ? TakeString(sum) : "none") << "\n";
  std::vector<int> flags(n);
  Ensure(bergeq_own_payoff_independent(game.get(), flags.data(), flags.size()));
  std::cout << "own_payoff_independent:";
  for (int f : flags) std::cout << ' ' << (f ? "true" : "false");
  std::cout << "\n";
  return kExitAffirmative;
}

int RunPure(const std::string& file, bergeq_kind kind) {
  GamePtr game = Load(file);
  bergeq_profile_list* raw = nullptr;
  Ensure(bergeq_enumerate_pure(game.get(), kind, &raw));
  ListPtr list(raw);
  const size_t count = bergeq_profile_list_size(list.get());
  for (size_t k = 0; k < count; ++k) {
    std::cout << bergeq_profile_list_label(list.get(), k) << "\n";
  }
  std::cout << "count: " << count << "\n";
  return kExitAffirmative;
}

int RunCheck(const std::string& file, const std::string& spec,
             const std::string& kind_name) {
  GamePtr game = Load(file);
  const bergeq_kind kind = kind_name == "nash" ? BERGEQ_NASH : BERGEQ_BERGE;
  bergeq_profile* raw_profile = nullptr;
  Ensure(bergeq_profile_parse(game.get(), spec.c_str(), &raw_profile));
  ProfilePtr profile(raw_profile);
  bergeq_verdict* raw = nullptr;
  Ensure(bergeq_check(game.get(), profile.get(), kind, &raw));
  VerdictPtr verdict(raw);

  const bool yes = bergeq_verdict_is_equilibrium(verdict.get());
  const int n = bergeq_game_num_players(game.get());
  std::cout << "kind: " << kind_name << "\n"
            << "profile: " << bergeq_profile_text(profile.get()) << "\n"
            << "verdict: " << (yes ? "equilibrium" : "not-equilibrium") << "\n"
            << "deficiency: " << bergeq_verdict_deficiency(verdict.get())
            << "\n"
            << "gaps:";
  for (int i = 0; i < n; ++i) {
    std::cout << ' ' << bergeq_verdict_gap(verdict.get(), i);
  }
  std::cout << "\nwitness: player "
            << bergeq_verdict_witness_player(verdict.get()) + 1
            << (kind == BERGEQ_NASH ? " deviation " : " complement ")
            << bergeq_verdict_witness_label(verdict.get()) << "\n";
  return yes ? kExitAffirmative : kExitNegative;
}

int RunDecide(const std::string& file) {
  GamePtr game = Load(file);
  bergeq_certificate* raw = nullptr;
  Ensure(bergeq_decide_berge_222(game.get(), &raw));
  CertPtr cert(raw);
  const bool exists = bergeq_certificate_exists(cert.get());
  std::cout << "outcome: " << (exists ? "exists" : "not-exists") << "\n";
  for (int i = 0; i < 3; ++i) {
    std::cout << "graph player " << i + 1 << ": "
              << bergeq_certificate_graph(cert.get(), i) << "\n";
  }
  std::cout << "intersection: " << bergeq_certificate_intersection(cert.get())
            << "\n";
  if (exists) {
    std::cout << "witness: " << bergeq_certificate_witness(cert.get()) << "\n";
    return kExitAffirmative;
  }
  const size_t conflicts = bergeq_certificate_conflict_count(cert.get());
  for (size_t k = 0; k < conflicts; ++k) {
    int a = 0, b = 0, axis = 0;
    bergeq_certificate_conflict(cert.get(), k, &a, &b, &axis);
    std::cout << "conflict: players " << a + 1 << " and " << b + 1
              << " on coordinate " << kAxisNames[axis] << "\n";
  }
  return kExitNegative;
}

int RunSearch(const std::string& file, int resolution, int top, int threads) {
  GamePtr game = Load(file);
  bergeq_search_result* raw = nullptr;
  Ensure(bergeq_grid_search(game.get(), resolution, top, threads, &raw));
  SearchPtr result(raw);
  if (const char* warning = bergeq_search_warning(result.get())) {
    std::cerr << "warning: " << warning << "\n";
  }
  std::cout << "resolution: " << resolution << "\n"
            << "grid_points: " << bergeq_search_grid_points(result.get())
            << "\n";
  const size_t count = bergeq_search_size(result.get());
  for (size_t k = 0; k < count; ++k) {
    std::cout << k + 1 << " deficiency " << bergeq_search_deficiency(result.get(), k)
              << " profile " << bergeq_search_profile(result.get(), k) << "\n";
  }
  return kExitAffirmative;
}

int RunBsg(const std::string& file, const std::string& out) {
  GamePtr game = Load(file);
  char* path = nullptr;
  Ensure(bergeq_bsg_sidecar_path(out.c_str(), &path));
  const std::string sidecar = TakeString(path);
  Ensure(bergeq_export_best_support_graphs(game.get(), out.c_str(),
                                           sidecar.c_str()));
  std::cout << "wrote " << out << "\nwrote " << sidecar << "\n";
  return kExitAffirmative;
}

int RunBuiltin(const std::string& name, const std::string& out) {
  char* doc = nullptr;
  Ensure(bergeq_builtin_document(name.c_str(), &doc));
  const std::string text = TakeString(doc);
  if (out.empty() || out == "-") {
    std::cout << text;
    return kExitAffirmative;
  }
  // Round-trip through the library so the written file is known to parse.
  bergeq_game* game = nullptr;
  Ensure(bergeq_game_parse(text.c_str(), &game));
  bergeq_game_free(game);
  FILE* f = std::fopen(out.c_str(), "wb");
  if (f == nullptr || std::fwrite(text.data(), 1, text.size(), f) != text.size()) {
    if (f) std::fclose(f);
    std::cerr << "error: cannot write " << out << "\n";
    return kExitInputError;
  }
  std::fclose(f);
  std::cout << "wrote " << out << "\n";
  return kExitAffirmative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Nash and Berge equilibrium analysis of finite games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bergeq_version()));

  std::string file;
  const std::string file_help = "game document, or builtin:NAME";

  auto* info = app.add_subcommand("info", "players, strategies and structure");
  info->add_option("FILE", file, file_help)->required();

  auto* pure_nash = app.add_subcommand("pure-nash", "list pure Nash equilibria");
  pure_nash->add_option("FILE", file, file_help)->required();
  auto* pure_berge =
      app.add_subcommand("pure-berge", "list pure Berge equilibria");
  pure_berge->add_option("FILE", file, file_help)->required();

  std::string profile_spec;
  std::string kind = "berge";
  auto* check = app.add_subcommand("check", "check one mixed profile");
  check->add_option("FILE", file, file_help)->required();
  check->add_option("--profile", profile_spec,
                    "\"uniform\" or JSON per-player probability vectors")
      ->required();
  check->add_option("--kind", kind, "nash or berge")
      ->check(CLI::IsMember({"nash", "berge"}));

  auto* decide = app.add_subcommand(
      "decide-berge", "exact Berge existence for own-payoff-independent 2x2x2");
  decide->add_option("FILE", file, file_help)->required();

  int resolution = 10;
  int top = 10;
  int threads = 0;
  auto* search = app.add_subcommand("search", "Berge deficiency grid search");
  search->add_option("FILE", file, file_help)->required();
  search->add_option("--resolution", resolution, "grid step 1/K");
  search->add_option("--top", top, "number of profiles to report");
  search->add_option("--threads", threads, "worker threads, 0 = all cores");

  std::string out;
  auto* bsg = app.add_subcommand("bsg", "export best-support graphs");
  bsg->add_option("FILE", file, file_help)->required();
  bsg->add_option("--out", out, "CSV path; sidecar gets .json")->required();

  std::string name;
  auto* builtin = app.add_subcommand("builtin", "write a shipped game");
  builtin->add_option("NAME", name, bergeq_builtin_names())->required();
  builtin->add_option("--out", out, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*info) return RunInfo(file);
    if (*pure_nash) return RunPure(file, BERGEQ_NASH);
    if (*pure_berge) return RunPure(file, BERGEQ_BERGE);
    if (*check) return RunCheck(file, profile_spec, kind);
    if (*decide) return RunDecide(file);
    if (*search) return RunSearch(file, resolution, top, threads);
    if (*bsg) return RunBsg(file, out);
    if (*builtin) return RunBuiltin(name, out);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitInputError;
}
