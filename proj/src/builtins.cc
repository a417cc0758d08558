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

#include <string>
#include <vector>

#include "bergeq/errors.h"
#include "bergeq/game_io.h"

namespace bergeq {
namespace {

using Names = std::vector<std::vector<std::string>>;

const Names& ThreeByTwoNames() {
  static const Names names = {{"A1", "A2"}, {"B1", "B2"}, {"C1", "C2"}};
  return names;
}

// The 3-player game in which nobody controls their own payoff and no Berge
// equilibrium exists. Storage order (a, b, c), c fastest.
Game Eq5() {
  return Game({2, 2, 2},
              {
                  2, 1, 0,  // A1 B1 C1
                  1, 2, 0,  // A1 B1 C2
                  1, 1, 1,  // A1 B2 C1
                  0, 2, 1,  // A1 B2 C2
                  2, 0, 1,  // A2 B1 C1
                  1, 1, 1,  // A2 B1 C2
                  1, 0, 2,  // A2 B2 C1
                  0, 1, 2,  // A2 B2 C2
              },
              ThreeByTwoNames());
}

Game Zero222() {
  return Game({2, 2, 2}, std::vector<Rational>(24), ThreeByTwoNames());
}

Game PrisonersDilemma() {
  return Game({2, 2},
              {
                  3, 3,  // C C
                  0, 5,  // C D
                  5, 0,  // D C
                  1, 1,  // D D
              },
              {{"C", "D"}, {"C", "D"}});
}

// Each player receives one unit for every co-player on their first strategy.
Game SumGame222() {
  std::vector<Rational> payoffs;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        payoffs.emplace_back((b == 0) + (c == 0));
        payoffs.emplace_back((a == 0) + (c == 0));
        payoffs.emplace_back((a == 0) + (b == 0));
      }
    }
  }
  return Game({2, 2, 2}, std::move(payoffs), ThreeByTwoNames());
}

}  // namespace

std::vector<std::string> BuiltinNames() {
  return {"eq5", "zero222", "pd", "sumgame222"};
}

Game BuiltinGame(std::string_view name) {
  if (name == "eq5") return Eq5();
  if (name == "zero222") return Zero222();
  if (name == "pd") return PrisonersDilemma();
  if (name == "sumgame222") return SumGame222();
  std::string available;
  for (const std::string& n : BuiltinNames()) {
    available += (available.empty() ? "" : ", ") + n;
  }
  throw InvalidArgument("unknown builtin game \"" + std::string(name) +
                        "\"; available: " + available);
}

std::string BuiltinDocument(std::string_view name) {
  return SerializeGame(BuiltinGame(name));
}

}  // namespace bergeq
