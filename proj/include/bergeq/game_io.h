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

#ifndef BERGEQ_GAME_IO_H_
#define BERGEQ_GAME_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bergeq/game.h"

namespace bergeq {

// Game documents are JSON:
//
//   {
//     "players": 3,
//     "strategies": [["A1", "A2"], ["B1", "B2"], ["C1", "C2"]],
//     "payoffs": [
//       {"profile": [0, 0, 0], "u": ["2", "1", "0"]},
//       ...
//     ]
//   }
//
// Every pure profile appears in exactly one record, in any order. Payoff
// entries are integers or strings "n" / "n/d".

// Throws ParseError (bad JSON or rational, with location) or FormatError
// (missing, duplicate or inconsistent records).
Game ParseGame(std::string_view document);
// Throws IoError when the file cannot be read.
Game LoadGame(const std::filesystem::path& path);

// Records are written in storage order; rationals as strings.
std::string SerializeGame(const Game& game);

// Names accepted by BuiltinDocument: "eq5", "zero222", "pd", "sumgame222".
std::vector<std::string> BuiltinNames();
// Throws InvalidArgument listing the available names.
std::string BuiltinDocument(std::string_view name);
Game BuiltinGame(std::string_view name);

// Profile specs are either the word "uniform" or a JSON array of
// per-player probability vectors, e.g. [["1/2","1/2"],[1,0],["1/4","3/4"]].
// Throws ParseError or InvalidArgument.
MixedProfile ParseProfileSpec(const Game& game, std::string_view spec);
// Inverse of ParseProfileSpec; every entry as "n/d".
std::string FormatProfile(const MixedProfile& profile);

// Best-support graph export for own-payoff-independent 2x2x2 games.
//
// CSV header `player,p,q,r,face`: one row per sampled point of every face of
// every player's graph, free coordinates stepped by 1/samples_per_edge,
// coordinates as exact rationals, player 1-based, face as "(*,1,1)" in CSV
// quotes. The JSON sidecar carries the exact faces, the bilinear forms and
// their maxima, and the intersection.
struct BestSupportGraphExport {
  std::string csv;
  std::string json;
};
inline constexpr int kBsgSamplesPerEdge = 20;
BestSupportGraphExport ExportBestSupportGraphs(
    const Game& game, int samples_per_edge = kBsgSamplesPerEdge);

// Sidecar path for a CSV path: the extension replaced by ".json", or
// ".faces.json" appended when that would collide.
std::filesystem::path SidecarPath(const std::filesystem::path& csv_path);

void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace bergeq

#endif  // BERGEQ_GAME_IO_H_
