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

#include <algorithm>
#include <set>

#include "bergeq/errors.h"
#include "bergeq/game_io.h"
#include "doctest.h"
#include "test_support.h"

namespace bergeq {
namespace {

MixedStrategy Binary(Rational first) {
  return MixedStrategy({first, Rational(1) - first});
}

const Game& Eq5() {
  static const Game game = BuiltinGame("eq5");
  return game;
}

const Game& Pd() {
  static const Game game = BuiltinGame("pd");
  return game;
}

const Game& Trivial() {
  static const Game game({1}, {Rational(0)});
  return game;
}

const Game& Zero222() {
  static const Game game = BuiltinGame("zero222");
  return game;
}

TEST_CASE("best own deviation value") {
  CHECK(BestOwnDeviationValue(Eq5(), PointProfile(Eq5(), {0, 0, 0}), 0) ==
        Rational(2));
  CHECK(BestOwnDeviationValue(Eq5(), UniformProfile(Eq5()), 2) ==
        Rational(1));
  CHECK(BestOwnDeviationValue(Pd(), PointProfile(Pd(), {0, 0}), 0) ==
        Rational(5));
}

TEST_CASE("nash verdicts") {
  EquilibriumVerdict v = IsNash(Eq5(), PointProfile(Eq5(), {0, 0, 0}));
  CHECK(v.is_equilibrium);
  CHECK(v.deficiency == Rational(0));

  v = IsNash(Pd(), PointProfile(Pd(), {0, 0}));
  CHECK_FALSE(v.is_equilibrium);
  CHECK(v.deficiency == Rational(2));
  CHECK(std::get<PureDeviation>(v.witness) == PureDeviation{0, 1});
  CHECK(v.player_gaps == std::vector<Rational>{2, 2});
}

TEST_CASE("every eq5 profile is a weak Nash equilibrium") {
  testing::Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    CHECK(IsNash(Eq5(), testing::RandomProfile(rng, Eq5())).is_equilibrium);
  }
}

TEST_CASE("best supports of eq5 do not depend on the own strategy") {
  const PureComplement expected[3] = {
      {0, {0, 0}},  // (B1, C1)
      {1, {0, 1}},  // (A1, C2)
      {2, {1, 1}},  // (A2, B2)
  };
  testing::Rng rng(9);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 25; ++k) {
      const MixedStrategy own =
          k < 2 ? MixedStrategy::Point(2, k) : testing::RandomStrategy(rng, 2);
      BestSupportResult bs = BestSupport(Eq5(), i, own);
      CHECK(bs.player == i);
      CHECK(bs.value == Rational(2));
      REQUIRE(bs.supports.size() == 1);
      CHECK(bs.supports[0] == expected[i]);
    }
  }
  CHECK(Eq5().Label(expected[1]) == "(A1,C2)");
}

TEST_CASE("best support lists every tied complement in order") {
  BestSupportResult bs = BestSupport(Zero222(), 1, MixedStrategy::Uniform(2));
  CHECK(bs.value == Rational(0));
  REQUIRE(bs.supports.size() == 4);
  CHECK(std::is_sorted(bs.supports.begin(), bs.supports.end()));
  CHECK(bs.supports.front() == PureComplement{1, {0, 0}});
  CHECK(bs.supports.back() == PureComplement{1, {1, 1}});
  CHECK_THROWS_AS(BestSupport(Zero222(), 1, MixedStrategy::Uniform(3)),
                  InvalidArgument);
}

TEST_CASE("berge verdicts") {
  for (std::size_t k = 0; k < Eq5().num_profiles(); ++k) {
    CHECK_FALSE(IsBerge(Eq5(), PointProfile(Eq5(), Eq5().ProfileAt(k)))
                    .is_equilibrium);
  }
  EquilibriumVerdict v = IsBerge(Pd(), PointProfile(Pd(), {0, 0}));
  CHECK(v.is_equilibrium);

  v = IsBerge(Eq5(), UniformProfile(Eq5()));
  CHECK_FALSE(v.is_equilibrium);
  CHECK(v.deficiency == Rational(1));
  CHECK(v.player_gaps == std::vector<Rational>{1, 1, 1});
  CHECK(std::get<PureComplement>(v.witness) == PureComplement{0, {0, 0}});
}

TEST_CASE("berge deficiency") {
  const MixedProfile origin = PointProfile(Eq5(), {0, 0, 0});
  CHECK(BergeDeficiency(Eq5(), origin) == Rational(2));
  EquilibriumVerdict v = IsBerge(Eq5(), origin);
  CHECK(v.player_gaps == std::vector<Rational>{0, 1, 2});
  // Player 3 gains 2 when A and B move to (A2, B2).
  CHECK(std::get<PureComplement>(v.witness) == PureComplement{2, {1, 1}});
  CHECK(BergeDeficiency(Eq5(), MixedProfile({Binary(Rational(1, 2)),
                                             Binary(Rational(1, 2)),
                                             Binary(Rational(1, 2))})) ==
        Rational(1));
  CHECK(BergeDeficiency(Pd(), PointProfile(Pd(), {0, 0})) == Rational(0));
}

TEST_CASE("witness attains the reported deficiency") {
  testing::Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Game g =
        testing::RandomIntegerGame(rng, testing::RandomCounts(rng, 3, 3));
    const MixedProfile s = testing::RandomProfile(rng, g);
    const std::vector<Rational> realized = ExpectedPayoffs(g, s);

    EquilibriumVerdict berge = IsBerge(g, s);
    const auto& c = std::get<PureComplement>(berge.witness);
    const int i = c.excluded_player;
    std::vector<MixedStrategy> co;
    for (int k = 0, j = 0; j < g.num_players(); ++j) {
      if (j == i) continue;
      co.push_back(MixedStrategy::Point(g.num_strategies(j),
                                        c.co_strategies[k++]));
    }
    CHECK(ExpectedPayoff(g, Compose(s[i], IncompleteProfile{i, co}), i) -
              realized[i] ==
          berge.deficiency);

    EquilibriumVerdict nash = IsNash(g, s);
    const auto& d = std::get<PureDeviation>(nash.witness);
    CHECK(ExpectedPayoff(g,
                         WithReplaced(s, d.player,
                                      MixedStrategy::Point(
                                          g.num_strategies(d.player),
                                          d.strategy)),
                         d.player) -
              realized[d.player] ==
          nash.deficiency);
    CHECK(nash.is_equilibrium == nash.deficiency.is_zero());
    CHECK(berge.is_equilibrium == berge.deficiency.is_zero());
  }
}

TEST_CASE("pure enumeration") {
  CHECK(EnumeratePureNash(Eq5()).size() == 8);
  CHECK(EnumeratePureNash(Pd()) == std::vector<PureProfile>{{1, 1}});
  CHECK(EnumeratePureNash(Trivial()) == std::vector<PureProfile>{{0}});
  CHECK(EnumeratePureBerge(Eq5()).empty());
  CHECK(EnumeratePureBerge(Pd()) == std::vector<PureProfile>{{0, 0}});
  CHECK(EnumeratePureBerge(Trivial()) == std::vector<PureProfile>{{0}});
}

TEST_CASE("structural properties") {
  CHECK(ConstantSum(Eq5()) == Rational(3));
  CHECK_FALSE(ConstantSum(Pd()).has_value());
  CHECK(ConstantSum(Zero222()) == Rational(0));

  CHECK(OwnPayoffIndependent(Eq5()) == std::vector<bool>{true, true, true});
  CHECK(OwnPayoffIndependent(Pd()) == std::vector<bool>{false, false});
  CHECK(OwnPayoffIndependent(Zero222()) ==
        std::vector<bool>{true, true, true});

  for (std::size_t k = 0; k < Eq5().num_profiles(); ++k) {
    CHECK(IsParetoOptimalPure(Eq5(), Eq5().ProfileAt(k)));
  }
  CHECK_FALSE(IsParetoOptimalPure(Pd(), {1, 1}));
  CHECK(IsParetoOptimalPure(Pd(), {0, 0}));
  CHECK(IsParetoOptimalPure(Trivial(), {0}));
  CHECK_THROWS_AS(IsParetoOptimalPure(Pd(), {2, 0}), InvalidArgument);
}

TEST_CASE("payoff swap") {
  const Game swapped = SwapPayoffs2p(Pd());
  CHECK(swapped.payoff({0, 1}, 0) == Rational(5));
  CHECK(swapped.payoff({0, 1}, 1) == Rational(0));
  CHECK(SwapPayoffs2p(swapped) == Pd());
  const Game symmetric({2, 2}, {1, 1, 4, 4, 0, 0, 2, 2});
  CHECK(SwapPayoffs2p(symmetric) == symmetric);
  CHECK_THROWS_AS(SwapPayoffs2p(Eq5()), UnsupportedOperation);
  CHECK_THROWS_AS(SwapPayoffs2p(Trivial()), UnsupportedOperation);
}

TEST_CASE("property: vertex attainment") {
  testing::Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const Game g =
        testing::RandomRationalGame(rng, testing::RandomCounts(rng, 3, 3));
    const int i = testing::Uniform(rng, 0, g.num_players() - 1);
    const MixedStrategy own = testing::RandomStrategy(rng, g.num_strategies(i));
    const Rational best = BestSupport(g, i, own).value;
    for (int k = 0; k < 10; ++k) {
      const MixedProfile s = WithReplaced(testing::RandomProfile(rng, g), i, own);
      CHECK(ExpectedPayoff(g, s, i) <= best);
    }
  }
}

TEST_CASE("property: reformulation through best supports") {
  testing::Rng rng(102);
  for (int trial = 0; trial < 80; ++trial) {
    const Game g =
        testing::RandomIntegerGame(rng, testing::RandomCounts(rng, 3, 2), 0, 2);
    // Pure profiles hit equilibria often enough to exercise both branches.
    const MixedProfile s =
        trial % 2 == 0 ? PointProfile(g, g.ProfileAt(testing::Uniform(
                                             rng, 0, g.num_profiles() - 1)))
                       : testing::RandomProfile(rng, g);
    bool every_complement_is_best = true;
    for (int i = 0; i < g.num_players(); ++i) {
      every_complement_is_best &=
          ExpectedPayoff(g, s, i) == BestSupport(g, i, s[i]).value;
    }
    CHECK(IsBerge(g, s).is_equilibrium == every_complement_is_best);
  }
}

TEST_CASE("property: no mixed own deviation beats the best pure one") {
  testing::Rng rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    const Game g =
        testing::RandomRationalGame(rng, testing::RandomCounts(rng, 3, 3));
    const MixedProfile s = testing::RandomProfile(rng, g);
    const int i = testing::Uniform(rng, 0, g.num_players() - 1);
    const Rational best = BestOwnDeviationValue(g, s, i);
    for (int k = 0; k < 10; ++k) {
      const MixedStrategy t = testing::RandomStrategy(rng, g.num_strategies(i));
      CHECK(ExpectedPayoff(g, WithReplaced(s, i, t), i) <= best);
    }
  }
}

TEST_CASE("property: own-payoff independence makes every profile Nash") {
  testing::Rng rng(104);
  for (int trial = 0; trial < 30; ++trial) {
    // Build payoffs that ignore the own index.
    std::vector<int> counts = testing::RandomCounts(rng, 3, 3);
    Game base = testing::RandomIntegerGame(rng, counts);
    std::vector<Rational> payoffs(base.raw_payoffs().begin(),
                                  base.raw_payoffs().end());
    const int n = static_cast<int>(counts.size());
    for (std::size_t k = 0; k < base.num_profiles(); ++k) {
      PureProfile s = base.ProfileAt(k);
      for (int i = 0; i < n; ++i) {
        PureProfile t = s;
        t[i] = 0;
        payoffs[k * n + i] = base.payoff(t, i);
      }
    }
    const Game g(counts, payoffs);
    REQUIRE(std::ranges::all_of(OwnPayoffIndependent(g),
                                [](bool b) { return b; }));
    for (int k = 0; k < 10; ++k) {
      CHECK(IsNash(g, testing::RandomProfile(rng, g)).is_equilibrium);
    }
    CHECK(EnumeratePureNash(g).size() == g.num_profiles());
  }
}

TEST_CASE("property: constant sum implies pure Pareto optimality") {
  testing::Rng rng(105);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> counts = testing::RandomCounts(rng, 3, 3);
    Game base = testing::RandomIntegerGame(rng, counts);
    std::vector<Rational> payoffs(base.raw_payoffs().begin(),
                                  base.raw_payoffs().end());
    const std::size_t n = counts.size();
    const Rational total(testing::Uniform(rng, -5, 5));
    for (std::size_t k = 0; k < base.num_profiles(); ++k) {
      Rational rest;
      for (std::size_t i = 0; i + 1 < n; ++i) rest += payoffs[k * n + i];
      payoffs[k * n + n - 1] = total - rest;
    }
    const Game g(counts, payoffs);
    REQUIRE(ConstantSum(g) == total);
    for (std::size_t k = 0; k < g.num_profiles(); ++k) {
      CHECK(IsParetoOptimalPure(g, g.ProfileAt(k)));
    }
  }
}

TEST_CASE("property: two-player duality under swapped payoffs") {
  testing::Rng rng(106);
  for (int trial = 0; trial < 60; ++trial) {
    const Game g = testing::RandomIntegerGame(
        rng, {testing::Uniform(rng, 1, 3), testing::Uniform(rng, 1, 3)}, 0, 3);
    const Game swapped = SwapPayoffs2p(g);
    CHECK(EnumeratePureBerge(g) == EnumeratePureNash(swapped));
    for (int k = 0; k < 10; ++k) {
      const MixedProfile s = testing::RandomProfile(rng, g);
      const EquilibriumVerdict berge = IsBerge(g, s);
      const EquilibriumVerdict nash = IsNash(swapped, s);
      CHECK(berge.is_equilibrium == nash.is_equilibrium);
      // The gaps agree player by player, not just the verdict.
      CHECK(berge.player_gaps[0] == nash.player_gaps[1]);
      CHECK(berge.player_gaps[1] == nash.player_gaps[0]);
    }
  }
}

TEST_CASE("property: pure verdicts match the brute-force oracle") {
  testing::Rng rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const Game g = testing::RandomIntegerGame(
        rng, testing::RandomCounts(rng, 3, 3), 0, 3);
    std::set<PureProfile> nash, berge;
    for (std::size_t k = 0; k < g.num_profiles(); ++k) {
      const PureProfile s = g.ProfileAt(k);
      const MixedProfile point = PointProfile(g, s);
      CHECK(IsNash(g, point).is_equilibrium == testing::OracleIsPureNash(g, s));
      CHECK(IsBerge(g, point).is_equilibrium ==
            testing::OracleIsPureBerge(g, s));
      if (testing::OracleIsPureNash(g, s)) nash.insert(s);
      if (testing::OracleIsPureBerge(g, s)) berge.insert(s);
    }
    const auto pure_nash = EnumeratePureNash(g);
    const auto pure_berge = EnumeratePureBerge(g);
    CHECK(std::set<PureProfile>(pure_nash.begin(), pure_nash.end()) == nash);
    CHECK(std::set<PureProfile>(pure_berge.begin(), pure_berge.end()) == berge);
    CHECK(std::is_sorted(pure_nash.begin(), pure_nash.end()));
    CHECK(std::is_sorted(pure_berge.begin(), pure_berge.end()));
  }
}

}  // namespace
}  // namespace bergeq
