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

#ifndef BERGEQ_EQUILIBRIA_H_
#define BERGEQ_EQUILIBRIA_H_

#include <optional>
#include <variant>
#include <vector>

#include "bergeq/game.h"
#include "bergeq/rational.h"

namespace bergeq {

enum class EquilibriumKind { kNash, kBerge };

// A unilateral pure deviation of `player`.
struct PureDeviation {
  int player = 0;
  int strategy = 0;

  friend bool operator==(const PureDeviation&, const PureDeviation&) = default;
};

// Equilibrium check with the size of the violation attached.
//
// `deficiency` is the largest gap, over players, between what the relevant
// deviation can achieve and what the profile yields; it is zero exactly at an
// equilibrium. `witness` attains that gap: a PureDeviation for Nash, a
// PureComplement (a joint co-player deviation) for Berge. When several
// players or deviations tie, the lowest player index and the
// lexicographically first deviation are reported.
struct EquilibriumVerdict {
  EquilibriumKind kind = EquilibriumKind::kNash;
  bool is_equilibrium = false;
  Rational deficiency;
  std::vector<Rational> player_gaps;
  std::variant<PureDeviation, PureComplement> witness;

  int witness_player() const;
};

// The best support to one strategy of `player`: the largest payoff the
// co-players can jointly give them and every pure complement attaining it, in
// lexicographic order.
struct BestSupportResult {
  int player = 0;
  Rational value;
  std::vector<PureComplement> supports;
};

// Maximum over `player`'s pure strategies of the payoff against the rest of
// `profile`. Payoffs are affine in the own strategy, so no mixed deviation
// does better.
Rational BestOwnDeviationValue(const Game& game, const MixedProfile& profile,
                               int player);

EquilibriumVerdict IsNash(const Game& game, const MixedProfile& profile);

// Maximizes the payoff of `player`, holding their strategy fixed, over pure
// co-player complements. The payoff is multilinear in the co-players'
// strategies, so its maximum over the product of their simplices is
// attained at a vertex and this value bounds every mixed complement too.
BestSupportResult BestSupport(const Game& game, int player,
                              const MixedStrategy& strategy);

// Berge check: every player's co-players, acting jointly, already give that
// player the best-support value.
EquilibriumVerdict IsBerge(const Game& game, const MixedProfile& profile);
Rational BergeDeficiency(const Game& game, const MixedProfile& profile);

EquilibriumVerdict Check(const Game& game, const MixedProfile& profile,
                         EquilibriumKind kind);

// Pure equilibria in lexicographic order.
std::vector<PureProfile> EnumeratePureNash(const Game& game);
std::vector<PureProfile> EnumeratePureBerge(const Game& game);

// The common payoff sum over all pure profiles, if there is one.
std::optional<Rational> ConstantSum(const Game& game);

// Entry i is true iff player i's payoff never depends on their own strategy.
std::vector<bool> OwnPayoffIndependent(const Game& game);

// No other pure profile gives every player at least as much and someone more.
bool IsParetoOptimalPure(const Game& game, const PureProfile& profile);

// Two-player game with (u1, u2) replaced by (u2, u1) at every profile.
// Throws UnsupportedOperation unless the game has exactly two players.
Game SwapPayoffs2p(const Game& game);

}  // namespace bergeq

#endif  // BERGEQ_EQUILIBRIA_H_
