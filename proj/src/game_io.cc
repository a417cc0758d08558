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

#include "bergeq/game_io.h"

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "bergeq/berge_search.h"
#include "bergeq/errors.h"
#include "json.hpp"

namespace bergeq {
namespace {

using json = nlohmann::json;

json ParseJson(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": invalid JSON at byte " +
                     std::to_string(e.byte) + ": " + e.what());
  }
}

Rational RationalFromJson(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational::Parse(value.dump());
  if (value.is_string()) {
    try {
      return Rational::Parse(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer or a rational string, got " +
                   value.dump());
}

const json& Member(const json& object, const char* key,
                   const std::string& where) {
  if (!object.is_object()) {
    throw FormatError(where + ": expected an object");
  }
  auto it = object.find(key);
  if (it == object.end()) {
    throw FormatError(where + ": missing member \"" + key + "\"");
  }
  return *it;
}

std::string ProfileText(const PureProfile& s) {
  return json(s).dump();
}

}  // namespace

Game ParseGame(std::string_view document) {
  const json doc = ParseJson(document, "game document");

  const json& players = Member(doc, "players", "document");
  if (!players.is_number_integer() || players.get<std::int64_t>() < 1) {
    throw FormatError("players: expected a positive integer");
  }
  const auto n = static_cast<std::size_t>(players.get<std::int64_t>());

  const json& strategies = Member(doc, "strategies", "document");
  if (!strategies.is_array() || strategies.size() != n) {
    throw FormatError("strategies: expected " + std::to_string(n) +
                      " name lists, one per player");
  }
  std::vector<int> counts;
  std::vector<std::vector<std::string>> names;
  for (std::size_t i = 0; i < n; ++i) {
    const json& list = strategies[i];
    const std::string where = "strategies[" + std::to_string(i) + "]";
    if (!list.is_array() || list.empty()) {
      throw FormatError(where + ": expected a nonempty list of names");
    }
    auto& player_names = names.emplace_back();
    for (const json& name : list) {
      if (!name.is_string()) {
        throw FormatError(where + ": strategy names must be strings");
      }
      player_names.push_back(name.get<std::string>());
    }
    counts.push_back(static_cast<int>(list.size()));
  }

  std::size_t num_profiles = 1;
  for (int m : counts) num_profiles *= m;

  const json& payoffs = Member(doc, "payoffs", "document");
  if (!payoffs.is_array()) {
    throw FormatError("payoffs: expected a list of records");
  }
  std::vector<Rational> tensor(num_profiles * n);
  std::map<std::size_t, std::size_t> seen;  // flat profile -> record index
  for (std::size_t r = 0; r < payoffs.size(); ++r) {
    const std::string where = "payoffs[" + std::to_string(r) + "]";
    const json& record = payoffs[r];
    const json& profile = Member(record, "profile", where);
    if (!profile.is_array() || profile.size() != n) {
      throw FormatError(where + ".profile: expected " + std::to_string(n) +
                        " strategy indices");
    }
    PureProfile s;
    std::size_t flat = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const json& index = profile[j];
      if (!index.is_number_integer() || index.get<std::int64_t>() < 0 ||
          index.get<std::int64_t>() >= counts[j]) {
        throw FormatError(where + ".profile[" + std::to_string(j) +
                          "]: expected an index in [0, " +
                          std::to_string(counts[j]) + ")");
      }
      s.push_back(index.get<int>());
      flat = flat * counts[j] + s.back();
    }
    if (auto [it, inserted] = seen.emplace(flat, r); !inserted) {
      throw FormatError(where + ": duplicate record for profile " +
                        ProfileText(s) + " (first at payoffs[" +
                        std::to_string(it->second) + "])");
    }
    const json& u = Member(record, "u", where);
    if (!u.is_array() || u.size() != n) {
      throw FormatError(where + ".u: expected " + std::to_string(n) +
                        " payoffs");
    }
    for (std::size_t i = 0; i < n; ++i) {
      tensor[flat * n + i] = RationalFromJson(
          u[i], where + ".u[" + std::to_string(i) + "]");
    }
  }
  if (seen.size() != num_profiles) {
    std::size_t missing = 0;
    while (seen.count(missing)) ++missing;
    PureProfile s(n);
    for (std::size_t j = n, rest = missing; j-- > 0;) {
      s[j] = static_cast<int>(rest % counts[j]);
      rest /= counts[j];
    }
    throw FormatError("payoffs: expected " + std::to_string(num_profiles) +
                      " records, got " + std::to_string(payoffs.size()) +
                      "; missing profile " + ProfileText(s));
  }
  return Game(std::move(counts), std::move(tensor), std::move(names));
}

Game LoadGame(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  try {
    return ParseGame(text.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string SerializeGame(const Game& game) {
  const int n = game.num_players();
  std::ostringstream out;
  out << "{\n  \"players\": " << n << ",\n  \"strategies\": "
      << json(game.strategy_names()).dump() << ",\n  \"payoffs\": [";
  PureProfile s(n, 0);
  std::size_t flat = 0;
  do {
    json u = json::array();
    for (int i = 0; i < n; ++i) u.push_back(game.payoff_at(flat, i).ToString());
    out << (flat == 0 ? "\n" : ",\n") << "    {\"profile\": " << json(s).dump()
        << ", \"u\": " << u.dump() << "}";
    ++flat;
  } while (NextProfile(game.strategy_counts(), s));
  out << "\n  ]\n}\n";
  return out.str();
}

MixedProfile ParseProfileSpec(const Game& game, std::string_view spec) {
  auto first = spec.find_first_not_of(" \t\r\n");
  auto last = spec.find_last_not_of(" \t\r\n");
  std::string_view trimmed =
      first == std::string_view::npos ? std::string_view()
                                      : spec.substr(first, last - first + 1);
  if (trimmed == "uniform") return UniformProfile(game);

  const json doc = ParseJson(trimmed, "profile");
  if (!doc.is_array() ||
      doc.size() != static_cast<std::size_t>(game.num_players())) {
    throw InvalidArgument("profile: expected " +
                          std::to_string(game.num_players()) +
                          " probability vectors, one per player");
  }
  std::vector<MixedStrategy> strategies;
  for (int j = 0; j < game.num_players(); ++j) {
    const std::string where = "profile[" + std::to_string(j) + "]";
    const json& vec = doc[j];
    if (!vec.is_array() ||
        vec.size() != static_cast<std::size_t>(game.num_strategies(j))) {
      throw InvalidArgument(where + ": expected " +
                            std::to_string(game.num_strategies(j)) +
                            " probabilities");
    }
    std::vector<Rational> p;
    for (std::size_t k = 0; k < vec.size(); ++k) {
      p.push_back(
          RationalFromJson(vec[k], where + "[" + std::to_string(k) + "]"));
    }
    try {
      strategies.emplace_back(std::move(p));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(where + ": " + e.what());
    }
  }
  return MixedProfile(std::move(strategies));
}

std::string FormatProfile(const MixedProfile& profile) {
  json out = json::array();
  for (const MixedStrategy& s : profile.strategies()) {
    json vec = json::array();
    for (const Rational& p : s.probabilities()) {
      vec.push_back(p.ToFractionString());
    }
    out.push_back(std::move(vec));
  }
  return out.dump();
}

BestSupportGraphExport ExportBestSupportGraphs(const Game& game,
                                               int samples_per_edge) {
  if (samples_per_edge < 1) {
    throw InvalidArgument("samples per edge must be >= 1");
  }
  const ExistenceCertificate cert = DecideBergeExistenceOi222(game);

  std::ostringstream csv;
  csv << "player,p,q,r,face\n";
  json players = json::array();
  for (int i = 0; i < 3; ++i) {
    const BilinearForm form = CoPlayerForm222(game, i);
    const BilinearArgmax best = MaximizeBilinear(form);
    json faces = json::array();
    for (const Face& face : cert.graphs[i].faces()) {
      faces.push_back(face.ToString());
      std::vector<int> free_axes;
      for (int k = 0; k < 3; ++k) {
        if (face[k] == Coord::kFree) free_axes.push_back(k);
      }
      std::vector<int> step(free_axes.size(), 0);
      while (true) {
        std::vector<Rational> point = face.Point(Rational(0));
        for (std::size_t f = 0; f < free_axes.size(); ++f) {
          point[free_axes[f]] = Rational(step[f], samples_per_edge);
        }
        csv << (i + 1) << ',' << point[0] << ',' << point[1] << ','
            << point[2] << ",\"" << face.ToString() << "\"\n";
        std::size_t f = free_axes.size();
        while (f > 0 && step[f - 1] == samples_per_edge) step[--f] = 0;
        if (f == 0) break;
        ++step[f - 1];
      }
    }
    players.push_back({{"player", i + 1},
                       {"form",
                        {{"a", form.a.ToString()},
                         {"b", form.b.ToString()},
                         {"c", form.c.ToString()},
                         {"d", form.d.ToString()}}},
                       {"max_value", best.max_value.ToString()},
                       {"faces", std::move(faces)}});
  }
  json intersection = json::array();
  for (const Face& face : cert.intersection.faces()) {
    intersection.push_back(face.ToString());
  }
  json sidecar = {{"coordinates", {"p", "q", "r"}},
                  {"samples_per_edge", samples_per_edge},
                  {"players", std::move(players)},
                  {"intersection", std::move(intersection)},
                  {"berge_equilibrium_exists", cert.exists}};
  return {csv.str(), sidecar.dump(2) + "\n"};
}

std::filesystem::path SidecarPath(const std::filesystem::path& csv_path) {
  std::filesystem::path sidecar = csv_path;
  sidecar.replace_extension(".json");
  if (sidecar == csv_path) {
    sidecar = csv_path;
    sidecar += ".faces.json";
  }
  return sidecar;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace bergeq
