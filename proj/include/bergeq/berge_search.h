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

#ifndef BERGEQ_BERGE_SEARCH_H_
#define BERGEQ_BERGE_SEARCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bergeq/equilibria.h"
#include "bergeq/game.h"
#include "bergeq/rational.h"

namespace bergeq {

// A point of the strategy cube gives, per player, the probability of their
// first pure strategy. Coordinate value 1 therefore means "first strategy".
enum class Coord : std::uint8_t { kZero, kOne, kFree };

// Axis-aligned face of the unit cube: each coordinate fixed to 0, fixed to 1
// or free in [0, 1].
class Face {
 public:
  Face() = default;
  explicit Face(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  // Parses "(*,1,0)" or "*10".
  static Face Parse(std::string_view text);

  int dimension() const { return static_cast<int>(coords_.size()); }
  Coord operator[](int axis) const { return coords_[axis]; }
  std::span<const Coord> coords() const { return coords_; }
  int num_free() const;

  // Every point of `other` lies in this face.
  bool Contains(const Face& other) const;
  bool Contains(std::span<const Rational> point) const;

  // Coordinate-wise meet; empty when some axis is fixed to 0 in one face and
  // to 1 in the other.
  std::optional<Face> Meet(const Face& other) const;

  // Fixed coordinates as 0 or 1, free ones as `free_value`.
  std::vector<Rational> Point(const Rational& free_value) const;

  // "(*,1,1)".
  std::string ToString() const;

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face&, const Face&) = default;

 private:
  std::vector<Coord> coords_;
};

// Union of faces of one dimension. Stored without duplicates and without
// faces contained in other members, sorted.
class FaceSet {
 public:
  explicit FaceSet(int dimension) : dimension_(dimension) {}
  FaceSet(int dimension, std::vector<Face> faces);

  int dimension() const { return dimension_; }
  const std::vector<Face>& faces() const { return faces_; }
  bool empty() const { return faces_.empty(); }
  std::size_t size() const { return faces_.size(); }

  void Insert(const Face& face);
  bool Contains(std::span<const Rational> point) const;
  FaceSet Intersect(const FaceSet& other) const;

  // "{(*,1,1),(0,0,*)}"; "{}" when empty.
  std::string ToString() const;

  friend bool operator==(const FaceSet&, const FaceSet&) = default;

 private:
  int dimension_;
  std::vector<Face> faces_;
};

// f(x, y) = a*x*y + b*x + c*y + d on [0, 1]^2.
struct BilinearForm {
  Rational a, b, c, d;

  Rational Evaluate(const Rational& x, const Rational& y) const;
};

struct BilinearArgmax {
  Rational max_value;
  FaceSet argmax{2};
};

// A bilinear form is linear along every edge of the square and has no
// interior maximum unless constant, so the maximum is the best corner and
// the argmax is the closure of the maximizing corners: an edge when both its
// ends attain, the whole square when the form is constant.
BilinearArgmax MaximizeBilinear(const BilinearForm& form);

// Payoff of `player` in a 2x2x2 own-payoff-independent game as a bilinear
// form in the first-strategy probabilities of the two co-players (lower
// player index first). Throws UnsupportedOperation when the game does not
// qualify.
BilinearForm CoPlayerForm222(const Game& game, int player);

// Throws UnsupportedOperation naming the offending player, or the shape.
void RequireOwnIndependent222(const Game& game);

// Graph of each player's best-support correspondence in the cube over
// (p, q, r): the own coordinate free, the co-player coordinates on the
// argmax of their bilinear form.
std::vector<FaceSet> BestSupportGraph222(const Game& game);

// Two players whose chosen faces fix `axis` to opposite values.
struct GraphConflict {
  std::vector<int> faces;  // index into each player's FaceSet
  int player_a = 0;
  int player_b = 0;
  int axis = 0;
};

struct ExistenceCertificate {
  bool exists = false;
  std::optional<MixedProfile> witness;
  std::vector<FaceSet> graphs;
  FaceSet intersection{3};
  // One entry per combination of faces, when the intersection is empty.
  std::vector<GraphConflict> conflicts;
};

// Exact mixed Berge existence for own-payoff-independent 2x2x2 games. For
// this class a profile is Berge iff it lies on all three best-support
// graphs, so the Berge set is their intersection. A returned witness has
// been re-checked with IsBerge.
ExistenceCertificate DecideBergeExistenceOi222(const Game& game);

struct GridPoint {
  MixedProfile profile;
  Rational deficiency;
};

struct GridSearchResult {
  int resolution = 0;
  std::uint64_t grid_points = 0;  // saturates at UINT64_MAX
  std::vector<GridPoint> best;    // ascending deficiency, then lexicographic
  std::optional<std::string> warning;
};

// Grid points above this count trigger a complexity warning.
inline constexpr std::uint64_t kGridWarningThreshold = 10'000'000;

// Number of points of the simplex grid with step 1/resolution over
// `num_strategies` pure strategies. Saturates at UINT64_MAX.
std::uint64_t SimplexGridSize(int num_strategies, int resolution);

// Product of the per-player simplex grid sizes, saturating.
std::uint64_t GridSearchSize(const Game& game, int resolution);
// Set when `grid_points` exceeds kGridWarningThreshold.
std::optional<std::string> GridSizeWarning(std::uint64_t grid_points);

// All probability vectors with entries in {0, 1/k, ..., 1}, ascending
// lexicographically.
std::vector<MixedStrategy> SimplexGrid(int num_strategies, int resolution);

// Evaluates the Berge deficiency exactly at every profile whose
// probabilities are multiples of 1/resolution and keeps the `top` smallest.
// Work is split across `threads` workers (0 = hardware concurrency); the
// result does not depend on the split. Throws InvalidArgument when
// resolution or top is not positive.
GridSearchResult GridSearchMinDeficiency(const Game& game, int resolution,
                                         int top, int threads = 0);

}  // namespace bergeq

#endif  // BERGEQ_BERGE_SEARCH_H_
