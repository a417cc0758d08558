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

#ifndef BERGEQ_GAME_H_
#define BERGEQ_GAME_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bergeq/rational.h"

namespace bergeq {

// One 0-based pure strategy index per player.
using PureProfile = std::vector<int>;

// Probability distribution over one player's pure strategies. Entries are
// nonnegative and sum to exactly one; the constructor enforces this.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<Rational> probabilities);

  static MixedStrategy Point(int num_strategies, int strategy);
  static MixedStrategy Uniform(int num_strategies);

  int size() const { return static_cast<int>(probabilities_.size()); }
  const Rational& operator[](int strategy) const {
    return probabilities_[strategy];
  }
  std::span<const Rational> probabilities() const { return probabilities_; }

  // The pure strategy when this is a point distribution, otherwise -1.
  int PureIndex() const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::vector<Rational> probabilities_;
};

// One mixed strategy per player. Lengths are checked against a game by
// Game::Check.
class MixedProfile {
 public:
  explicit MixedProfile(std::vector<MixedStrategy> strategies)
      : strategies_(std::move(strategies)) {}

  int num_players() const { return static_cast<int>(strategies_.size()); }
  const MixedStrategy& operator[](int player) const {
    return strategies_[player];
  }
  std::span<const MixedStrategy> strategies() const { return strategies_; }

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;

 private:
  std::vector<MixedStrategy> strategies_;
};

// Strategies of every player except `excluded_player`, in increasing player
// order.
struct IncompleteProfile {
  int excluded_player = 0;
  std::vector<MixedStrategy> co_strategies;

  friend bool operator==(const IncompleteProfile&,
                         const IncompleteProfile&) = default;
};

// A pure incomplete profile: co-player strategy indices in increasing player
// order, skipping `excluded_player`.
struct PureComplement {
  int excluded_player = 0;
  std::vector<int> co_strategies;

  friend bool operator==(const PureComplement&,
                         const PureComplement&) = default;
  friend auto operator<=>(const PureComplement&,
                          const PureComplement&) = default;
};

// Finite normal-form game with exact payoffs.
//
// Payoffs are stored as one flat array: pure profiles enumerated row-major
// over (i_1, ..., i_n), the last player's index varying fastest, and for
// each profile the n payoffs in player order.
class Game {
 public:
  // `strategy_names` is either empty (indices are used as names) or holds
  // one name list per player with matching lengths.
  Game(std::vector<int> strategy_counts, std::vector<Rational> payoffs,
       std::vector<std::vector<std::string>> strategy_names = {});

  int num_players() const { return static_cast<int>(counts_.size()); }
  int num_strategies(int player) const;
  std::span<const int> strategy_counts() const { return counts_; }
  std::size_t num_profiles() const { return num_profiles_; }
  bool has_strategy_names() const { return has_names_; }
  const std::string& strategy_name(int player, int strategy) const;
  const std::vector<std::vector<std::string>>& strategy_names() const {
    return names_;
  }

  // Throws InvalidArgument for an out-of-range profile or player.
  const Rational& payoff(const PureProfile& profile, int player) const;
  std::span<const Rational> payoffs(const PureProfile& profile) const;
  // Unchecked access by flat profile index.
  const Rational& payoff_at(std::size_t flat_profile, int player) const {
    return payoffs_[flat_profile * counts_.size() + player];
  }
  std::span<const Rational> raw_payoffs() const { return payoffs_; }

  std::size_t FlatIndex(const PureProfile& profile) const;
  PureProfile ProfileAt(std::size_t flat_profile) const;

  void CheckPlayer(int player) const;
  void Check(const PureProfile& profile) const;
  void Check(const MixedProfile& profile) const;
  void Check(const IncompleteProfile& profile) const;
  void Check(int player, const MixedStrategy& strategy) const;

  // "(A1,B2,C1)" using strategy names.
  std::string Label(const PureProfile& profile) const;
  std::string Label(const PureComplement& complement) const;

  // Payoff tensors and strategy counts agree; names are ignored.
  bool SamePayoffs(const Game& other) const;
  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::vector<int> counts_;
  std::vector<Rational> payoffs_;
  std::vector<std::vector<std::string>> names_;
  bool has_names_ = false;
  std::size_t num_profiles_ = 0;
};

// Advances `profile` to the next pure profile in storage order. Returns false
// after the last one (and leaves `profile` reset to all zeros).
bool NextProfile(std::span<const int> counts, PureProfile& profile);

// Inserts an own strategy into a pure complement, producing a full profile.
PureProfile Compose(int own_strategy, const PureComplement& complement);

MixedProfile PointProfile(const Game& game, const PureProfile& profile);
MixedProfile UniformProfile(const Game& game);

// The identification (s_i, s_-i) = s.
MixedProfile Compose(const MixedStrategy& own,
                     const IncompleteProfile& complement);
IncompleteProfile Complement(const MixedProfile& profile, int player);

// Copy of `profile` with the strategy of `player` replaced. Throws
// InvalidArgument on an out-of-range player or length mismatch.
MixedProfile WithReplaced(const MixedProfile& profile, int player,
                          const MixedStrategy& strategy);

const Rational& Payoff(const Game& game, const PureProfile& profile,
                       int player);

// Expected payoff of `player` under the product distribution of `profile`.
Rational ExpectedPayoff(const Game& game, const MixedProfile& profile,
                        int player);
// All players at once; one pass over the tensor.
std::vector<Rational> ExpectedPayoffs(const Game& game,
                                      const MixedProfile& profile);

}  // namespace bergeq

#endif  // BERGEQ_GAME_H_
