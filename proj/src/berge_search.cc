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

#include "bergeq/berge_search.h"

#include <algorithm>
#include <exception>
#include <limits>
#include <string>
#include <thread>
#include <utility>

#include "bergeq/errors.h"

namespace bergeq {
namespace {

Coord CoordOf(int bit) { return bit == 1 ? Coord::kOne : Coord::kZero; }

char CoordChar(Coord c) {
  switch (c) {
    case Coord::kZero:
      return '0';
    case Coord::kOne:
      return '1';
    case Coord::kFree:
      return '*';
  }
  return '?';
}

// The two co-players of `player` in a 3-player game, ascending.
std::pair<int, int> CoPlayers(int player) {
  switch (player) {
    case 0:
      return {1, 2};
    case 1:
      return {0, 2};
    default:
      return {0, 1};
  }
}

MixedStrategy Binary(const Rational& first) {
  return MixedStrategy({first, Rational(1) - first});
}

}  // namespace

Face Face::Parse(std::string_view text) {
  std::vector<Coord> coords;
  for (char ch : text) {
    switch (ch) {
      case '0':
        coords.push_back(Coord::kZero);
        break;
      case '1':
        coords.push_back(Coord::kOne);
        break;
      case '*':
        coords.push_back(Coord::kFree);
        break;
      case '(':
      case ')':
      case ',':
      case ' ':
        break;
      default:
        throw ParseError("bad face character '" + std::string(1, ch) +
                         "' in \"" + std::string(text) + "\"");
    }
  }
  return Face(std::move(coords));
}

int Face::num_free() const {
  return static_cast<int>(std::count(coords_.begin(), coords_.end(),
                                     Coord::kFree));
}

bool Face::Contains(const Face& other) const {
  if (other.dimension() != dimension()) return false;
  for (int k = 0; k < dimension(); ++k) {
    if (coords_[k] != Coord::kFree && coords_[k] != other.coords_[k]) {
      return false;
    }
  }
  return true;
}

bool Face::Contains(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != dimension()) return false;
  for (int k = 0; k < dimension(); ++k) {
    switch (coords_[k]) {
      case Coord::kZero:
        if (!point[k].is_zero()) return false;
        break;
      case Coord::kOne:
        if (point[k] != Rational(1)) return false;
        break;
      case Coord::kFree:
        if (point[k] < Rational(0) || point[k] > Rational(1)) return false;
        break;
    }
  }
  return true;
}

std::optional<Face> Face::Meet(const Face& other) const {
  if (other.dimension() != dimension()) {
    throw InvalidArgument("meet of faces with different dimensions");
  }
  std::vector<Coord> out(coords_.size());
  for (int k = 0; k < dimension(); ++k) {
    const Coord x = coords_[k];
    const Coord y = other.coords_[k];
    if (x == Coord::kFree) {
      out[k] = y;
    } else if (y == Coord::kFree || x == y) {
      out[k] = x;
    } else {
      return std::nullopt;
    }
  }
  return Face(std::move(out));
}

std::vector<Rational> Face::Point(const Rational& free_value) const {
  std::vector<Rational> point;
  point.reserve(coords_.size());
  for (Coord c : coords_) {
    switch (c) {
      case Coord::kZero:
        point.emplace_back(0);
        break;
      case Coord::kOne:
        point.emplace_back(1);
        break;
      case Coord::kFree:
        point.push_back(free_value);
        break;
    }
  }
  return point;
}

std::string Face::ToString() const {
  std::string out = "(";
  for (int k = 0; k < dimension(); ++k) {
    if (k > 0) out += ',';
    out += CoordChar(coords_[k]);
  }
  return out + ")";
}

FaceSet::FaceSet(int dimension, std::vector<Face> faces)
    : dimension_(dimension) {
  for (const Face& f : faces) Insert(f);
}

void FaceSet::Insert(const Face& face) {
  if (face.dimension() != dimension_) {
    throw InvalidArgument("face of dimension " +
                          std::to_string(face.dimension()) +
                          " inserted into a set of dimension " +
                          std::to_string(dimension_));
  }
  for (const Face& f : faces_) {
    if (f.Contains(face)) return;
  }
  std::erase_if(faces_, [&](const Face& f) { return face.Contains(f); });
  faces_.insert(std::upper_bound(faces_.begin(), faces_.end(), face), face);
}

bool FaceSet::Contains(std::span<const Rational> point) const {
  return std::any_of(faces_.begin(), faces_.end(),
                     [&](const Face& f) { return f.Contains(point); });
}

FaceSet FaceSet::Intersect(const FaceSet& other) const {
  if (other.dimension_ != dimension_) {
    throw InvalidArgument("intersection of face sets of different dimension");
  }
  FaceSet out(dimension_);
  for (const Face& x : faces_) {
    for (const Face& y : other.faces_) {
      if (auto meet = x.Meet(y)) out.Insert(*meet);
    }
  }
  return out;
}

std::string FaceSet::ToString() const {
  std::string out = "{";
  for (std::size_t k = 0; k < faces_.size(); ++k) {
    if (k > 0) out += ',';
    out += faces_[k].ToString();
  }
  return out + "}";
}

Rational BilinearForm::Evaluate(const Rational& x, const Rational& y) const {
  return a * x * y + b * x + c * y + d;
}

BilinearArgmax MaximizeBilinear(const BilinearForm& form) {
  // corner[x][y] = f(x, y) at x, y in {0, 1}.
  Rational corner[2][2];
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) corner[x][y] = form.Evaluate(x, y);
  }
  BilinearArgmax result;
  result.max_value = std::max({corner[0][0], corner[0][1], corner[1][0],
                               corner[1][1]});
  bool attains[2][2];
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      attains[x][y] = corner[x][y] == result.max_value;
      if (attains[x][y]) result.argmax.Insert(Face({CoordOf(x), CoordOf(y)}));
    }
  }
  for (int v = 0; v < 2; ++v) {
    if (attains[v][0] && attains[v][1]) {
      result.argmax.Insert(Face({CoordOf(v), Coord::kFree}));
    }
    if (attains[0][v] && attains[1][v]) {
      result.argmax.Insert(Face({Coord::kFree, CoordOf(v)}));
    }
  }
  const bool constant =
      form.a.is_zero() && form.b.is_zero() && form.c.is_zero();
  if (constant) result.argmax.Insert(Face({Coord::kFree, Coord::kFree}));
  return result;
}

void RequireOwnIndependent222(const Game& game) {
  const auto counts = game.strategy_counts();
  if (counts.size() != 3 || counts[0] != 2 || counts[1] != 2 ||
      counts[2] != 2) {
    throw UnsupportedOperation(
        "best-support graphs need a 3-player game with 2 strategies each");
  }
  const std::vector<bool> independent = OwnPayoffIndependent(game);
  for (int i = 0; i < 3; ++i) {
    if (!independent[i]) {
      throw UnsupportedOperation("player " + std::to_string(i + 1) +
                                 " can influence their own payoff");
    }
  }
}

BilinearForm CoPlayerForm222(const Game& game, int player) {
  RequireOwnIndependent222(game);
  game.CheckPlayer(player);
  const auto [first, second] = CoPlayers(player);
  // u[c1][c2]: payoff when the co-players play strategies c1 and c2.
  Rational u[2][2];
  for (int c1 = 0; c1 < 2; ++c1) {
    for (int c2 = 0; c2 < 2; ++c2) {
      PureProfile s(3, 0);
      s[first] = c1;
      s[second] = c2;
      u[c1][c2] = game.payoff(s, player);
    }
  }
  // x, y are the probabilities of strategy 0, so
  // f = u00 xy + u01 x(1-y) + u10 (1-x)y + u11 (1-x)(1-y).
  return BilinearForm{u[0][0] - u[0][1] - u[1][0] + u[1][1],
                      u[0][1] - u[1][1], u[1][0] - u[1][1], u[1][1]};
}

std::vector<FaceSet> BestSupportGraph222(const Game& game) {
  RequireOwnIndependent222(game);
  std::vector<FaceSet> graphs;
  for (int i = 0; i < 3; ++i) {
    const auto [first, second] = CoPlayers(i);
    const BilinearArgmax best = MaximizeBilinear(CoPlayerForm222(game, i));
    FaceSet graph(3);
    for (const Face& f : best.argmax.faces()) {
      std::vector<Coord> coords(3, Coord::kFree);
      coords[first] = f[0];
      coords[second] = f[1];
      graph.Insert(Face(std::move(coords)));
    }
    graphs.push_back(std::move(graph));
  }
  return graphs;
}

ExistenceCertificate DecideBergeExistenceOi222(const Game& game) {
  ExistenceCertificate cert;
  cert.graphs = BestSupportGraph222(game);
  std::vector<GraphConflict> conflicts;
  const auto& g0 = cert.graphs[0].faces();
  const auto& g1 = cert.graphs[1].faces();
  const auto& g2 = cert.graphs[2].faces();
  for (std::size_t i0 = 0; i0 < g0.size(); ++i0) {
    for (std::size_t i1 = 0; i1 < g1.size(); ++i1) {
      for (std::size_t i2 = 0; i2 < g2.size(); ++i2) {
        const Face* chosen[3] = {&g0[i0], &g1[i1], &g2[i2]};
        std::optional<Face> meet = chosen[0]->Meet(*chosen[1]);
        if (meet) meet = meet->Meet(*chosen[2]);
        if (meet) {
          cert.intersection.Insert(*meet);
          continue;
        }
        // Scan player a's fixed axes in order for the first player b that
        // fixes the same axis the other way.
        GraphConflict conflict;
        conflict.faces = {static_cast<int>(i0), static_cast<int>(i1),
                          static_cast<int>(i2)};
        bool found = false;
        for (int a = 0; a < 3 && !found; ++a) {
          for (int axis = 0; axis < 3 && !found; ++axis) {
            const Coord x = (*chosen[a])[axis];
            if (x == Coord::kFree) continue;
            for (int b = 0; b < 3 && !found; ++b) {
              const Coord y = (*chosen[b])[axis];
              if (b == a || y == Coord::kFree || y == x) continue;
              conflict.player_a = a;
              conflict.player_b = b;
              conflict.axis = axis;
              found = true;
            }
          }
        }
        conflicts.push_back(std::move(conflict));
      }
    }
  }
  cert.exists = !cert.intersection.empty();
  if (!cert.exists) {
    cert.conflicts = std::move(conflicts);
    return cert;
  }
  const std::vector<Rational> point =
      cert.intersection.faces().front().Point(Rational(1, 2));
  MixedProfile witness({Binary(point[0]), Binary(point[1]), Binary(point[2])});
  if (!IsBerge(game, witness).is_equilibrium) {
    throw Error("internal error: intersection witness is not a Berge "
                "equilibrium");
  }
  cert.witness = std::move(witness);
  return cert;
}

std::uint64_t SimplexGridSize(int num_strategies, int resolution) {
  if (num_strategies < 1 || resolution < 0) return 0;
  // C(k + m - 1, m - 1); each partial product is itself a binomial.
  unsigned __int128 size = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (int i = 1; i < num_strategies; ++i) {
    size = size * static_cast<unsigned>(resolution + i) / static_cast<unsigned>(i);
    if (size > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(size);
}

std::uint64_t GridSearchSize(const Game& game, int resolution) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 total = 1;
  for (int m : game.strategy_counts()) {
    total = std::min<unsigned __int128>(
        total * SimplexGridSize(m, resolution), kMax);
  }
  return static_cast<std::uint64_t>(total);
}

std::optional<std::string> GridSizeWarning(std::uint64_t grid_points) {
  if (grid_points <= kGridWarningThreshold) return std::nullopt;
  return "grid has " + std::to_string(grid_points) +
         " points; expect a long run";
}

std::vector<MixedStrategy> SimplexGrid(int num_strategies, int resolution) {
  if (resolution < 1) throw InvalidArgument("grid resolution must be >= 1");
  if (num_strategies < 1) throw InvalidArgument("no strategies");
  std::vector<MixedStrategy> grid;
  std::vector<int> counts(num_strategies, 0);
  // Depth-first over the first coordinate upward gives lexicographic order.
  auto fill = [&](auto&& self, int position, int remaining) -> void {
    if (position == num_strategies - 1) {
      counts[position] = remaining;
      std::vector<Rational> p;
      p.reserve(num_strategies);
      for (int c : counts) p.emplace_back(c, resolution);
      grid.emplace_back(std::move(p));
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[position] = c;
      self(self, position + 1, remaining - c);
    }
  };
  fill(fill, 0, resolution);
  return grid;
}

namespace {

struct Candidate {
  Rational deficiency;
  std::vector<std::size_t> cell;  // per-player grid index

  friend bool operator<(const Candidate& x, const Candidate& y) {
    if (auto order = x.deficiency <=> y.deficiency; order != 0) {
      return order < 0;
    }
    return x.cell < y.cell;
  }
};

}  // namespace

GridSearchResult GridSearchMinDeficiency(const Game& game, int resolution,
                                         int top, int threads) {
  if (resolution < 1) throw InvalidArgument("grid resolution must be >= 1");
  if (top < 1) throw InvalidArgument("top must be >= 1");

  GridSearchResult result;
  result.resolution = resolution;
  result.grid_points = GridSearchSize(game, resolution);
  result.warning = GridSizeWarning(result.grid_points);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (result.grid_points == kMax) {
    throw InvalidArgument("grid too large to enumerate");
  }
  std::vector<std::vector<MixedStrategy>> grids;
  for (int m : game.strategy_counts()) {
    grids.push_back(SimplexGrid(m, resolution));
  }

  const std::uint64_t count = result.grid_points;
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, count / 256)));

  const int n = game.num_players();
  std::vector<std::vector<Candidate>> kept(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      std::vector<Candidate>& mine = kept[w];
      const std::uint64_t begin = count * w / workers;
      const std::uint64_t end = count * (w + 1) / workers;
      std::vector<std::size_t> cell(n);
      for (std::uint64_t flat = begin; flat < end; ++flat) {
        std::uint64_t rest = flat;
        for (int j = n; j-- > 0;) {
          cell[j] = rest % grids[j].size();
          rest /= grids[j].size();
        }
        std::vector<MixedStrategy> strategies;
        strategies.reserve(n);
        for (int j = 0; j < n; ++j) strategies.push_back(grids[j][cell[j]]);
        Candidate c{BergeDeficiency(game, MixedProfile(std::move(strategies))),
                    cell};
        if (static_cast<int>(mine.size()) < top) {
          mine.push_back(std::move(c));
          std::push_heap(mine.begin(), mine.end());
        } else if (c < mine.front()) {
          std::pop_heap(mine.begin(), mine.end());
          mine.back() = std::move(c);
          std::push_heap(mine.begin(), mine.end());
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<Candidate> merged;
  for (auto& v : kept) {
    std::move(v.begin(), v.end(), std::back_inserter(merged));
  }
  std::sort(merged.begin(), merged.end());
  if (static_cast<int>(merged.size()) > top) merged.resize(top);
  for (Candidate& c : merged) {
    std::vector<MixedStrategy> strategies;
    for (int j = 0; j < n; ++j) strategies.push_back(grids[j][c.cell[j]]);
    result.best.push_back(
        {MixedProfile(std::move(strategies)), std::move(c.deficiency)});
  }
  return result;
}

}  // namespace bergeq
