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

#include "bergeq/equilibria.h"

#include <cstddef>
#include <string>
#include <utility>

#include "bergeq/errors.h"

namespace bergeq {
namespace {

// Mixed-radix index of the co-player part of a pure profile, last co-player
// fastest. Matches lexicographic order of PureComplement.
std::size_t ComplementIndex(const Game& game, const PureProfile& s,
                            int player) {
  std::size_t index = 0;
  for (int j = 0; j < game.num_players(); ++j) {
    if (j == player) continue;
    index = index * game.strategy_counts()[j] + s[j];
  }
  return index;
}

std::size_t NumComplements(const Game& game, int player) {
  return game.num_profiles() / game.strategy_counts()[player];
}

PureComplement ComplementAt(const Game& game, int player, std::size_t index) {
  PureComplement out{player, std::vector<int>(game.num_players() - 1)};
  int k = game.num_players() - 1;
  for (int j = game.num_players() - 1; j >= 0; --j) {
    if (j == player) continue;
    const int m = game.strategy_counts()[j];
    out.co_strategies[--k] = static_cast<int>(index % m);
    index /= m;
  }
  return out;
}

// Payoff of `player` for each of their pure strategies against the
// co-player part of `profile`.
std::vector<Rational> OwnDeviationValues(const Game& game,
                                         const MixedProfile& profile,
                                         int player) {
  const int n = game.num_players();
  std::vector<Rational> values(game.strategy_counts()[player]);
  PureProfile s(n, 0);
  std::size_t flat = 0;
  do {
    Rational weight(1);
    for (int j = 0; j < n && !weight.is_zero(); ++j) {
      if (j != player) weight *= profile[j][s[j]];
    }
    if (!weight.is_zero()) {
      values[s[player]] += weight * game.payoff_at(flat, player);
    }
    ++flat;
  } while (NextProfile(game.strategy_counts(), s));
  return values;
}

// Payoff of `player` playing `strategy` against each pure complement.
std::vector<Rational> ComplementValues(const Game& game, int player,
                                       const MixedStrategy& strategy) {
  std::vector<Rational> values(NumComplements(game, player));
  PureProfile s(game.num_players(), 0);
  std::size_t flat = 0;
  do {
    const Rational& w = strategy[s[player]];
    if (!w.is_zero()) {
      values[ComplementIndex(game, s, player)] +=
          w * game.payoff_at(flat, player);
    }
    ++flat;
  } while (NextProfile(game.strategy_counts(), s));
  return values;
}

std::size_t FirstArgmax(const std::vector<Rational>& values) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] > values[best]) best = k;
  }
  return best;
}

// Fills deficiency, is_equilibrium and the witness player from player_gaps.
int Summarize(EquilibriumVerdict& verdict) {
  std::size_t worst = FirstArgmax(verdict.player_gaps);
  verdict.deficiency = verdict.player_gaps[worst];
  verdict.is_equilibrium = verdict.deficiency.is_zero();
  return static_cast<int>(worst);
}

}  // namespace

int EquilibriumVerdict::witness_player() const {
  if (const auto* d = std::get_if<PureDeviation>(&witness)) return d->player;
  return std::get<PureComplement>(witness).excluded_player;
}

Rational BestOwnDeviationValue(const Game& game, const MixedProfile& profile,
                               int player) {
  game.Check(profile);
  game.CheckPlayer(player);
  std::vector<Rational> values = OwnDeviationValues(game, profile, player);
  return values[FirstArgmax(values)];
}

EquilibriumVerdict IsNash(const Game& game, const MixedProfile& profile) {
  const std::vector<Rational> realized = ExpectedPayoffs(game, profile);
  EquilibriumVerdict verdict;
  verdict.kind = EquilibriumKind::kNash;
  std::vector<int> best_deviation(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    std::vector<Rational> values = OwnDeviationValues(game, profile, i);
    std::size_t best = FirstArgmax(values);
    best_deviation[i] = static_cast<int>(best);
    verdict.player_gaps.push_back(values[best] - realized[i]);
  }
  int worst = Summarize(verdict);
  verdict.witness = PureDeviation{worst, best_deviation[worst]};
  return verdict;
}

BestSupportResult BestSupport(const Game& game, int player,
                              const MixedStrategy& strategy) {
  game.Check(player, strategy);
  std::vector<Rational> values = ComplementValues(game, player, strategy);
  BestSupportResult result;
  result.player = player;
  result.value = values[FirstArgmax(values)];
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] == result.value) {
      result.supports.push_back(ComplementAt(game, player, k));
    }
  }
  return result;
}

EquilibriumVerdict IsBerge(const Game& game, const MixedProfile& profile) {
  const std::vector<Rational> realized = ExpectedPayoffs(game, profile);
  EquilibriumVerdict verdict;
  verdict.kind = EquilibriumKind::kBerge;
  std::vector<std::size_t> best_complement(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    std::vector<Rational> values = ComplementValues(game, i, profile[i]);
    std::size_t best = FirstArgmax(values);
    best_complement[i] = best;
    verdict.player_gaps.push_back(values[best] - realized[i]);
  }
  int worst = Summarize(verdict);
  verdict.witness = ComplementAt(game, worst, best_complement[worst]);
  return verdict;
}

Rational BergeDeficiency(const Game& game, const MixedProfile& profile) {
  return IsBerge(game, profile).deficiency;
}

EquilibriumVerdict Check(const Game& game, const MixedProfile& profile,
                         EquilibriumKind kind) {
  return kind == EquilibriumKind::kNash ? IsNash(game, profile)
                                        : IsBerge(game, profile);
}

std::vector<PureProfile> EnumeratePureNash(const Game& game) {
  std::vector<PureProfile> out;
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    PureProfile s = game.ProfileAt(k);
    if (IsNash(game, PointProfile(game, s)).is_equilibrium) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<PureProfile> EnumeratePureBerge(const Game& game) {
  std::vector<PureProfile> out;
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    PureProfile s = game.ProfileAt(k);
    if (IsBerge(game, PointProfile(game, s)).is_equilibrium) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::optional<Rational> ConstantSum(const Game& game) {
  std::optional<Rational> common;
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    Rational sum;
    for (int i = 0; i < game.num_players(); ++i) sum += game.payoff_at(k, i);
    if (!common) {
      common = sum;
    } else if (*common != sum) {
      return std::nullopt;
    }
  }
  return common;
}

std::vector<bool> OwnPayoffIndependent(const Game& game) {
  std::vector<bool> flags(game.num_players(), true);
  for (int i = 0; i < game.num_players(); ++i) {
    PureProfile s(game.num_players(), 0);
    do {
      if (s[i] != 0) continue;
      const Rational& base = game.payoff(s, i);
      PureProfile t = s;
      for (t[i] = 1; t[i] < game.strategy_counts()[i]; ++t[i]) {
        if (game.payoff(t, i) != base) {
          flags[i] = false;
          break;
        }
      }
    } while (flags[i] && NextProfile(game.strategy_counts(), s));
  }
  return flags;
}

bool IsParetoOptimalPure(const Game& game, const PureProfile& profile) {
  const std::size_t own = game.FlatIndex(profile);
  const int n = game.num_players();
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    if (k == own) continue;
    bool weakly_better = true;
    bool strictly_better = false;
    for (int i = 0; i < n && weakly_better; ++i) {
      const auto order = game.payoff_at(k, i) <=> game.payoff_at(own, i);
      if (order < 0) weakly_better = false;
      if (order > 0) strictly_better = true;
    }
    if (weakly_better && strictly_better) return false;
  }
  return true;
}

Game SwapPayoffs2p(const Game& game) {
  if (game.num_players() != 2) {
    throw UnsupportedOperation(
        "payoff swap needs a 2-player game, got " +
        std::to_string(game.num_players()) + " players");
  }
  std::vector<Rational> swapped(game.raw_payoffs().begin(),
                                game.raw_payoffs().end());
  for (std::size_t k = 0; k + 1 < swapped.size(); k += 2) {
    std::swap(swapped[k], swapped[k + 1]);
  }
  std::vector<int> counts(game.strategy_counts().begin(),
                          game.strategy_counts().end());
  return Game(std::move(counts), std::move(swapped),
              game.has_strategy_names()
                  ? game.strategy_names()
                  : std::vector<std::vector<std::string>>{});
}

}  // namespace bergeq
