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

#include "bergeq/game.h"

#include <limits>
#include <string>
#include <utility>

#include "bergeq/errors.h"

namespace bergeq {

MixedStrategy::MixedStrategy(std::vector<Rational> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) {
    throw InvalidArgument("mixed strategy over zero pure strategies");
  }
  Rational total;
  for (const Rational& p : probabilities_) {
    if (p.sign() < 0) {
      throw InvalidArgument("negative probability " + p.ToString());
    }
    total += p;
  }
  if (total != Rational(1)) {
    throw InvalidArgument("probabilities sum to " + total.ToString() +
                          ", not 1");
  }
}

MixedStrategy MixedStrategy::Point(int num_strategies, int strategy) {
  if (num_strategies < 1 || strategy < 0 || strategy >= num_strategies) {
    throw InvalidArgument("pure strategy " + std::to_string(strategy) +
                          " out of range [0, " +
                          std::to_string(num_strategies) + ")");
  }
  std::vector<Rational> p(num_strategies);
  p[strategy] = 1;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::Uniform(int num_strategies) {
  if (num_strategies < 1) {
    throw InvalidArgument("uniform strategy over zero pure strategies");
  }
  return MixedStrategy(
      std::vector<Rational>(num_strategies, Rational(1, num_strategies)));
}

int MixedStrategy::PureIndex() const {
  for (int s = 0; s < size(); ++s) {
    if (probabilities_[s] == Rational(1)) return s;
  }
  return -1;
}

Game::Game(std::vector<int> strategy_counts, std::vector<Rational> payoffs,
           std::vector<std::vector<std::string>> strategy_names)
    : counts_(std::move(strategy_counts)),
      payoffs_(std::move(payoffs)),
      names_(std::move(strategy_names)) {
  if (counts_.empty()) throw InvalidArgument("game needs at least 1 player");
  num_profiles_ = 1;
  for (int m : counts_) {
    if (m < 1) {
      throw InvalidArgument("every player needs at least 1 strategy");
    }
    if (num_profiles_ > std::numeric_limits<std::size_t>::max() /
                            counts_.size() / static_cast<std::size_t>(m)) {
      throw InvalidArgument("payoff tensor too large");
    }
    num_profiles_ *= m;
  }
  if (payoffs_.size() != num_profiles_ * counts_.size()) {
    throw InvalidArgument("expected " +
                          std::to_string(num_profiles_ * counts_.size()) +
                          " payoff entries, got " +
                          std::to_string(payoffs_.size()));
  }
  has_names_ = !names_.empty();
  if (has_names_) {
    if (names_.size() != counts_.size()) {
      throw InvalidArgument("strategy name lists do not match player count");
    }
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (names_[i].size() != static_cast<std::size_t>(counts_[i])) {
        throw InvalidArgument("player " + std::to_string(i + 1) + " has " +
                              std::to_string(counts_[i]) +
                              " strategies but " +
                              std::to_string(names_[i].size()) + " names");
      }
    }
  } else {
    for (int m : counts_) {
      auto& list = names_.emplace_back();
      for (int s = 0; s < m; ++s) list.push_back(std::to_string(s));
    }
  }
}

int Game::num_strategies(int player) const {
  CheckPlayer(player);
  return counts_[player];
}

const std::string& Game::strategy_name(int player, int strategy) const {
  CheckPlayer(player);
  if (strategy < 0 || strategy >= counts_[player]) {
    throw InvalidArgument("strategy index out of range");
  }
  return names_[player][strategy];
}

const Rational& Game::payoff(const PureProfile& profile, int player) const {
  CheckPlayer(player);
  return payoff_at(FlatIndex(profile), player);
}

std::span<const Rational> Game::payoffs(const PureProfile& profile) const {
  return std::span<const Rational>(payoffs_).subspan(
      FlatIndex(profile) * counts_.size(), counts_.size());
}

std::size_t Game::FlatIndex(const PureProfile& profile) const {
  Check(profile);
  std::size_t flat = 0;
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    flat = flat * counts_[j] + profile[j];
  }
  return flat;
}

PureProfile Game::ProfileAt(std::size_t flat_profile) const {
  if (flat_profile >= num_profiles_) {
    throw InvalidArgument("flat profile index out of range");
  }
  PureProfile profile(counts_.size());
  for (std::size_t j = counts_.size(); j-- > 0;) {
    profile[j] = static_cast<int>(flat_profile % counts_[j]);
    flat_profile /= counts_[j];
  }
  return profile;
}

void Game::CheckPlayer(int player) const {
  if (player < 0 || player >= num_players()) {
    throw InvalidArgument("player index " + std::to_string(player) +
                          " out of range [0, " +
                          std::to_string(num_players()) + ")");
  }
}

void Game::Check(const PureProfile& profile) const {
  if (profile.size() != counts_.size()) {
    throw InvalidArgument("pure profile has " +
                          std::to_string(profile.size()) +
                          " entries, game has " +
                          std::to_string(counts_.size()) + " players");
  }
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    if (profile[j] < 0 || profile[j] >= counts_[j]) {
      throw InvalidArgument("strategy " + std::to_string(profile[j]) +
                            " of player " + std::to_string(j + 1) +
                            " out of range");
    }
  }
}

void Game::Check(int player, const MixedStrategy& strategy) const {
  CheckPlayer(player);
  if (strategy.size() != counts_[player]) {
    throw InvalidArgument("strategy for player " +
                          std::to_string(player + 1) + " has " +
                          std::to_string(strategy.size()) +
                          " entries, expected " +
                          std::to_string(counts_[player]));
  }
}

void Game::Check(const MixedProfile& profile) const {
  if (profile.num_players() != num_players()) {
    throw InvalidArgument("mixed profile has " +
                          std::to_string(profile.num_players()) +
                          " strategies, game has " +
                          std::to_string(num_players()) + " players");
  }
  for (int j = 0; j < num_players(); ++j) Check(j, profile[j]);
}

void Game::Check(const IncompleteProfile& profile) const {
  CheckPlayer(profile.excluded_player);
  if (profile.co_strategies.size() + 1 != counts_.size()) {
    throw InvalidArgument("incomplete profile needs " +
                          std::to_string(counts_.size() - 1) +
                          " co-strategies");
  }
  int k = 0;
  for (int j = 0; j < num_players(); ++j) {
    if (j == profile.excluded_player) continue;
    Check(j, profile.co_strategies[k++]);
  }
}

std::string Game::Label(const PureProfile& profile) const {
  Check(profile);
  std::string out = "(";
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (j > 0) out += ",";
    out += names_[j][profile[j]];
  }
  return out + ")";
}

std::string Game::Label(const PureComplement& complement) const {
  CheckPlayer(complement.excluded_player);
  if (complement.co_strategies.size() + 1 != counts_.size()) {
    throw InvalidArgument("pure complement has wrong length");
  }
  std::string out = "(";
  std::size_t k = 0;
  for (int j = 0; j < num_players(); ++j) {
    if (j == complement.excluded_player) continue;
    int s = complement.co_strategies[k];
    if (s < 0 || s >= counts_[j]) {
      throw InvalidArgument("pure complement index out of range");
    }
    if (k++ > 0) out += ",";
    out += names_[j][s];
  }
  return out + ")";
}

bool Game::SamePayoffs(const Game& other) const {
  return counts_ == other.counts_ && payoffs_ == other.payoffs_;
}

bool NextProfile(std::span<const int> counts, PureProfile& profile) {
  for (std::size_t j = counts.size(); j-- > 0;) {
    if (++profile[j] < counts[j]) return true;
    profile[j] = 0;
  }
  return false;
}

PureProfile Compose(int own_strategy, const PureComplement& complement) {
  PureProfile profile;
  profile.reserve(complement.co_strategies.size() + 1);
  profile.insert(profile.end(), complement.co_strategies.begin(),
                 complement.co_strategies.begin() + complement.excluded_player);
  profile.push_back(own_strategy);
  profile.insert(profile.end(),
                 complement.co_strategies.begin() + complement.excluded_player,
                 complement.co_strategies.end());
  return profile;
}

MixedProfile PointProfile(const Game& game, const PureProfile& profile) {
  game.Check(profile);
  std::vector<MixedStrategy> strategies;
  strategies.reserve(profile.size());
  for (int j = 0; j < game.num_players(); ++j) {
    strategies.push_back(
        MixedStrategy::Point(game.num_strategies(j), profile[j]));
  }
  return MixedProfile(std::move(strategies));
}

MixedProfile UniformProfile(const Game& game) {
  std::vector<MixedStrategy> strategies;
  for (int m : game.strategy_counts()) {
    strategies.push_back(MixedStrategy::Uniform(m));
  }
  return MixedProfile(std::move(strategies));
}

MixedProfile Compose(const MixedStrategy& own,
                     const IncompleteProfile& complement) {
  std::vector<MixedStrategy> strategies = complement.co_strategies;
  if (complement.excluded_player < 0 ||
      complement.excluded_player > static_cast<int>(strategies.size())) {
    throw InvalidArgument("excluded player out of range");
  }
  strategies.insert(strategies.begin() + complement.excluded_player, own);
  return MixedProfile(std::move(strategies));
}

IncompleteProfile Complement(const MixedProfile& profile, int player) {
  if (player < 0 || player >= profile.num_players()) {
    throw InvalidArgument("player index out of range");
  }
  IncompleteProfile out{player, {}};
  for (int j = 0; j < profile.num_players(); ++j) {
    if (j != player) out.co_strategies.push_back(profile[j]);
  }
  return out;
}

MixedProfile WithReplaced(const MixedProfile& profile, int player,
                          const MixedStrategy& strategy) {
  if (player < 0 || player >= profile.num_players()) {
    throw InvalidArgument("player index out of range");
  }
  if (profile[player].size() != strategy.size()) {
    throw InvalidArgument("replacement strategy has " +
                          std::to_string(strategy.size()) +
                          " entries, expected " +
                          std::to_string(profile[player].size()));
  }
  std::vector<MixedStrategy> strategies(profile.strategies().begin(),
                                        profile.strategies().end());
  strategies[player] = strategy;
  return MixedProfile(std::move(strategies));
}

const Rational& Payoff(const Game& game, const PureProfile& profile,
                       int player) {
  return game.payoff(profile, player);
}

std::vector<Rational> ExpectedPayoffs(const Game& game,
                                      const MixedProfile& profile) {
  game.Check(profile);
  const int n = game.num_players();
  std::vector<Rational> totals(n);
  PureProfile s(n, 0);
  std::size_t flat = 0;
  do {
    Rational weight(1);
    for (int j = 0; j < n && !weight.is_zero(); ++j) weight *= profile[j][s[j]];
    if (!weight.is_zero()) {
      for (int i = 0; i < n; ++i) totals[i] += weight * game.payoff_at(flat, i);
    }
    ++flat;
  } while (NextProfile(game.strategy_counts(), s));
  return totals;
}

Rational ExpectedPayoff(const Game& game, const MixedProfile& profile,
                        int player) {
  game.CheckPlayer(player);
  return ExpectedPayoffs(game, profile)[player];
}

}  // namespace bergeq
