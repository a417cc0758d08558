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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bergeq/equilibria.h"
#include "bergeq/errors.h"
#include "doctest.h"
#include "json.hpp"
#include "test_support.h"

namespace bergeq {
namespace {

constexpr const char* kSmall = R"({
  "players": 3,
  "strategies": [["a"], ["b"], ["c1", "c2"]],
  "payoffs": [
    {"profile": [0, 0, 1], "u": [4, "-2", "7/3"]},
    {"profile": [0, 0, 0], "u": ["1/2", "0", "1"]}
  ]
})";

std::string Without(std::string text, const std::string& piece) {
  const auto at = text.find(piece);
  REQUIRE(at != std::string::npos);
  return text.erase(at, piece.size());
}

template <typename E>
std::string MessageOf(const std::string& document) {
  try {
    ParseGame(document);
  } catch (const E& e) {
    return e.what();
  }
  FAIL("no exception of the expected type");
  return {};
}

TEST_CASE("parse reads records in any order") {
  const Game g = ParseGame(kSmall);
  CHECK(g.num_players() == 3);
  CHECK(g.strategy_counts()[2] == 2);
  CHECK(g.payoff({0, 0, 0}, 0) == Rational(1, 2));
  CHECK(g.payoff({0, 0, 0}, 1) == Rational(0));
  CHECK(g.payoff({0, 0, 0}, 2) == Rational(1));
  CHECK(g.payoff({0, 0, 1}, 2) == Rational(7, 3));
  CHECK(g.strategy_name(2, 1) == "c2");
}

TEST_CASE("the shipped eq5 document") {
  const Game g = ParseGame(BuiltinDocument("eq5"));
  CHECK(std::vector<Rational>(g.payoffs({0, 0, 0}).begin(),
                              g.payoffs({0, 0, 0}).end()) ==
        std::vector<Rational>{2, 1, 0});
  CHECK(std::vector<Rational>(g.payoffs({1, 1, 1}).begin(),
                              g.payoffs({1, 1, 1}).end()) ==
        std::vector<Rational>{0, 1, 2});
  CHECK(g.Label({1, 1, 1}) == "(A2,B2,C2)");
}

TEST_CASE("builtins") {
  const Game zero = BuiltinGame("zero222");
  for (const Rational& u : zero.raw_payoffs()) CHECK(u == Rational(0));
  const Game pd = BuiltinGame("pd");
  CHECK(pd.payoff({0, 1}, 0) == Rational(0));
  CHECK(pd.payoff({0, 1}, 1) == Rational(5));
  const Game sum = BuiltinGame("sumgame222");
  CHECK(sum.payoff({1, 0, 0}, 0) == Rational(2));
  CHECK(sum.payoff({1, 0, 0}, 1) == Rational(1));
  CHECK(sum.payoff({1, 0, 1}, 2) == Rational(1));
  CHECK(OwnPayoffIndependent(sum) == std::vector<bool>{true, true, true});
  for (const std::string& name : BuiltinNames()) {
    CHECK(ParseGame(BuiltinDocument(name)) == BuiltinGame(name));
  }
  try {
    BuiltinGame("nope");
    FAIL("expected InvalidArgument");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("eq5, zero222, pd, sumgame222") !=
          std::string::npos);
  }
}

TEST_CASE("missing and duplicate profiles are format errors") {
  const std::string eq5 = BuiltinDocument("eq5");
  const std::string missing = Without(
      eq5, ",\n    {\"profile\": [1,1,1], \"u\": [\"0\",\"1\",\"2\"]}");
  CHECK(MessageOf<FormatError>(missing).find("missing profile [1,1,1]") !=
        std::string::npos);

  std::string duplicate = eq5;
  duplicate.replace(duplicate.find("[1,1,1]"), 7, "[0,0,0]");
  CHECK(MessageOf<FormatError>(duplicate).find("duplicate record for profile "
                                               "[0,0,0]") != std::string::npos);
}

TEST_CASE("malformed documents") {
  std::string bad_rational = kSmall;
  bad_rational.replace(bad_rational.find("\"7/3\""), 5, "\"7/0\"");
  CHECK(MessageOf<ParseError>(bad_rational).find("payoffs[0].u[2]") !=
        std::string::npos);

  std::string float_payoff = kSmall;
  float_payoff.replace(float_payoff.find("4,"), 2, "4.5,");
  CHECK(MessageOf<ParseError>(float_payoff).find("payoffs[0].u[0]") !=
        std::string::npos);

  CHECK(MessageOf<ParseError>("{\"players\": 3,").find("invalid JSON") !=
        std::string::npos);

  std::string count = kSmall;
  count.replace(count.find("\"players\": 3"), 12, "\"players\": 2");
  CHECK(MessageOf<FormatError>(count).find("strategies") != std::string::npos);

  std::string short_u = kSmall;
  short_u.replace(short_u.find("[4, \"-2\", \"7/3\"]"), 16, "[4, \"-2\"]");
  CHECK(MessageOf<FormatError>(short_u).find("payoffs[0].u") !=
        std::string::npos);

  std::string range = kSmall;
  range.replace(range.find("[0, 0, 1]"), 9, "[0, 0, 2]");
  CHECK(MessageOf<FormatError>(range).find("payoffs[0].profile[2]") !=
        std::string::npos);

  CHECK_THROWS_AS(ParseGame("[]"), FormatError);
  CHECK_THROWS_AS(ParseGame(R"({"players": 0, "strategies": [], "payoffs": []})"),
                  FormatError);
}

TEST_CASE("property: serialize then parse is the identity") {
  testing::Rng rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    const Game g =
        testing::RandomRationalGame(rng, testing::RandomCounts(rng, 4, 3));
    const Game back = ParseGame(SerializeGame(g));
    CHECK(back.SamePayoffs(g));
    CHECK(back.strategy_names() == g.strategy_names());
  }
}

TEST_CASE("profile specs") {
  const Game eq5 = BuiltinGame("eq5");
  CHECK(ParseProfileSpec(eq5, " uniform\n") == UniformProfile(eq5));
  const MixedProfile s =
      ParseProfileSpec(eq5, R"([["1/3","2/3"],[1,0],["1/4","3/4"]])");
  CHECK(s[0][0] == Rational(1, 3));
  CHECK(s[1] == MixedStrategy::Point(2, 0));
  CHECK(FormatProfile(s) ==
        R"([["1/3","2/3"],["1/1","0/1"],["1/4","3/4"]])");
  CHECK(ParseProfileSpec(eq5, FormatProfile(s)) == s);
  CHECK_THROWS_AS(ParseProfileSpec(eq5, R"([["1/2","1/3"],[1,0],[1,0]])"),
                  InvalidArgument);
  CHECK_THROWS_AS(ParseProfileSpec(eq5, R"([[1,0],[1,0]])"), InvalidArgument);
  CHECK_THROWS_AS(ParseProfileSpec(eq5, R"([[1,0],[1,0],[1,0,0]])"),
                  InvalidArgument);
  CHECK_THROWS_AS(ParseProfileSpec(eq5, R"([["x",0],[1,0],[1,0]])"),
                  ParseError);
  CHECK_THROWS_AS(ParseProfileSpec(eq5, "unifrm"), ParseError);
}

TEST_CASE("best-support graph export for eq5") {
  const BestSupportGraphExport data =
      ExportBestSupportGraphs(BuiltinGame("eq5"));
  std::istringstream csv(data.csv);
  std::string line;
  std::getline(csv, line);
  CHECK(line == "player,p,q,r,face");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    // player,p,q,r,"face"
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream fields(line.substr(0, line.find(",\"")));
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 4);
    const std::vector<Rational> x{Rational::Parse(cells[1]),
                                  Rational::Parse(cells[2]),
                                  Rational::Parse(cells[3])};
    const std::string face = line.substr(line.find(",\"") + 2);
    if (cells[0] == "1") {
      CHECK(face == "(*,1,1)\"");
      CHECK((x[1] == Rational(1) && x[2] == Rational(1)));
    } else if (cells[0] == "2") {
      CHECK(face == "(1,*,0)\"");
      CHECK((x[0] == Rational(1) && x[2] == Rational(0)));
    } else {
      CHECK(cells[0] == "3");
      CHECK(face == "(0,0,*)\"");
      CHECK((x[0] == Rational(0) && x[1] == Rational(0)));
    }
  }
  CHECK(rows == 3 * 21);
  CHECK(data.csv.find("\n1,1/20,1,1,") != std::string::npos);

  const auto sidecar = nlohmann::json::parse(data.json);
  CHECK(sidecar["berge_equilibrium_exists"] == false);
  CHECK(sidecar["intersection"].empty());
  CHECK(sidecar["players"][0]["faces"][0] == "(*,1,1)");
  CHECK(sidecar["players"][1]["faces"][0] == "(1,*,0)");
  CHECK(sidecar["players"][2]["faces"][0] == "(0,0,*)");
  CHECK(sidecar["players"][0]["max_value"] == "2");
  CHECK(sidecar["players"][0]["form"]["b"] == "1");
  CHECK_THROWS_AS(ExportBestSupportGraphs(BuiltinGame("pd")),
                  UnsupportedOperation);
}

TEST_CASE("sidecar paths and file helpers") {
  CHECK(SidecarPath("out/bsg.csv") == std::filesystem::path("out/bsg.json"));
  CHECK(SidecarPath("bsg") == std::filesystem::path("bsg.json"));
  CHECK(SidecarPath("bsg.json") == std::filesystem::path("bsg.json.faces.json"));

  const auto dir = std::filesystem::temp_directory_path() / "bergeq_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "eq5.json";
  WriteTextFile(path, BuiltinDocument("eq5"));
  CHECK(LoadGame(path) == BuiltinGame("eq5"));
  CHECK_THROWS_AS(LoadGame(dir / "absent.json"), IoError);
  CHECK_THROWS_AS(WriteTextFile(dir / "no" / "such" / "dir.txt", "x"), IoError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace bergeq
