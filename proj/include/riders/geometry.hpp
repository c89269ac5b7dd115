#pragma once

// Exact plane geometry for riders: directions, movesets, the side-of-line
// predicate and the clockwise region labeling around a rider.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "riders/rational.hpp"

namespace riders {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

/// A primitive integer vector standing for one straight move (both rays).
/// Canonical sign: dy > 0, or dy == 0 and dx > 0.
class Direction {
 public:
  /// Throws InvalidArgument for the zero vector.
  Direction(std::int64_t dx, std::int64_t dy);

  std::int64_t dx() const { return dx_; }
  std::int64_t dy() const { return dy_; }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  std::int64_t dx_;
  std::int64_t dy_;
};

Direction normalize_direction(std::int64_t dx, std::int64_t dy);

/// An integer ray; used for the 2r rays bounding the sectors around a rider.
struct Ray {
  std::int64_t dx;
  std::int64_t dy;
  friend bool operator==(const Ray&, const Ray&) = default;
};

using SignPattern = std::vector<std::int8_t>;

/// r pairwise non-parallel directions shared by every rider.
///
/// Directions are stored in clockwise order starting from the labeling
/// reference: (0,1) when present, otherwise the direction of largest angle
/// in [0, 180) degrees. Ray k (0-based, k < 2r) is the k-th ray met when
/// sweeping clockwise from the reference's positive ray; sector k+1 lies
/// between ray k and ray (k+1) mod 2r.
class MoveSet {
 public:
  /// Throws InvalidArgument when empty or when two directions are parallel.
  explicit MoveSet(std::vector<Direction> directions);

  std::size_t size() const { return directions_.size(); }
  const std::vector<Direction>& directions() const { return directions_; }
  const Direction& direction(std::size_t m) const { return directions_[m]; }
  std::size_t reference_index() const { return 0; }
  const std::vector<Ray>& rays() const { return rays_; }

  /// Sign of det(direction m, v) for each m; the pattern that identifies the
  /// sector containing v.
  const SignPattern& pattern_of_label(int label) const { return patterns_.at(label - 1); }
  /// Label 1..2r for a realizable pattern, 0 when the pattern matches no sector.
  int label_of_pattern(std::span<const std::int8_t> signs) const;
  /// True when `prefix` (signs for directions 0..prefix.size()-1) begins some sector pattern.
  bool is_pattern_prefix(std::span<const std::int8_t> prefix) const;

  /// Strictly interior integer vector of sector `label`.
  Ray sector_sample(int label) const;

  std::string to_string() const;

  friend bool operator==(const MoveSet& a, const MoveSet& b) { return a.directions_ == b.directions_; }

 private:
  std::vector<Direction> directions_;
  std::vector<Ray> rays_;
  std::vector<SignPattern> patterns_;
};

/// Parses "0,1;1,1;1,0;1,-1" or one of the aliases "queen", "rook".
MoveSet parse_moveset(std::string_view text);

/// Moveset used when none is given: rook for r = 2, queen for r = 4, and the
/// prefix of (0,1),(1,1),(1,0),(1,-1),(1,2),(2,1),(1,-2),(2,-1),... otherwise.
MoveSet default_moveset(std::size_t r);

MoveSet queen_moveset();
MoveSet rook_moveset();

/// Sign of det(dir, other - base): +1 left of the directed line, -1 right, 0 on it.
int side_sign(const Point& base, const Direction& dir, const Point& other);

/// Throws AttackingError when a == b.
bool is_attacking(const Point& a, const Point& b, const MoveSet& moves);

/// 1-based clockwise sector of `target` seen from `observer`.
/// Throws AttackingError when target is on one of observer's move lines.
int region_of(const Point& observer, const Point& target, const MoveSet& moves);

/// Label seen from the other rider of the same pair: ((label + r - 1) mod 2r) + 1.
int antipodal_label(int label, std::size_t r);

using Placement = std::vector<Point>;

/// Throws AttackingError naming the first offending pair and direction.
void require_non_attacking(std::span<const Point> placement, const MoveSet& moves);

}  // namespace riders
