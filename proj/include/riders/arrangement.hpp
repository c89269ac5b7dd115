#pragma once

// The planar arrangement of all q*r move lines of a placement: cell counts,
// interior witnesses, and the extension options a further rider would have.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "riders/geometry.hpp"
#include "riders/signature.hpp"

namespace riders {

struct Line {
  Direction direction;
  Point anchor;
  std::size_t owner = 0;  // 1-based rider
  std::size_t move = 0;   // index into MoveSet::directions()
};

/// Lines owner-major: rider 1's moves first.
using LineSet = std::vector<Line>;

/// Throws AttackingError for an attacking placement.
LineSet build_lines(std::span<const Point> placement, const MoveSet& moves);

/// Value of det(direction, p - anchor); its sign says which side of the line p is on.
Rational line_value(const Line& line, const Point& p);

/// Distinct intersection points with the lines through each.
std::map<std::pair<Rational, Rational>, std::vector<std::size_t>> intersection_points(const LineSet& lines);

/// 1 + L + sum over distinct intersection points of (lines through it - 1).
/// Lines are assumed pairwise distinct.
std::size_t count_cells(const LineSet& lines);

/// True when every crossing away from the riders involves exactly two lines.
bool is_generic(const LineSet& lines, std::span<const Point> placement);

struct CellWitness {
  Point point;
  SignPattern cell_signs;
};

/// One strictly interior point per open cell, in depth-first sign order.
std::vector<CellWitness> enumerate_cells(const LineSet& lines);

/// Region labels of a prospective extra rider, relative to riders 1..q.
using Extension = std::vector<int>;

struct ExtensionProfile {
  Signature base_signature;
  std::set<Extension> extensions;
  /// First cell witness found for each extension.
  std::map<Extension, Point> witnesses;
};

ExtensionProfile extension_profile(std::span<const Point> placement, const MoveSet& moves);

/// Signature of the placement extended by a rider with the given extension.
Signature extend_signature(const Signature& base, const Extension& extension);

// ---------------------------------------------------------------------------
// Problem-space search

/// Up to `count` generic placements spread through the chamber recording
/// `sig`, built as convex combinations of the LP witness and vertices of the
/// chamber slice {sign * form >= 1} inside a bounding box. Each is re-verified
/// to record `sig`. Rider 1 sits at the origin in every returned placement.
std::vector<Placement> sample_chamber(const Signature& sig, const MoveSet& moves, std::size_t count,
                                      std::uint64_t seed);

struct ProblemPair {
  Placement first;
  Placement second;
  ExtensionProfile first_profile;
  ExtensionProfile second_profile;
  std::vector<Extension> only_first;
  std::vector<Extension> only_second;
};

struct ProblemSearch {
  std::optional<ProblemPair> pair;
  std::size_t samples = 0;
  std::size_t distinct_profiles = 0;
};

/// Searches placements recording `type_sig` (directly, and via every relabeled
/// chamber of its type mapped back) for two with different extension profiles.
/// Throws InvalidArgument for a malformed signature, InfeasibleError when the
/// signature is not realizable.
ProblemSearch find_problem_pair(const Signature& type_sig, const MoveSet& moves, std::size_t samples_per_cell = 8,
                                std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Space-count audit

struct RandomPlacementOptions {
  std::int64_t magnitude = 2000;  // numerators drawn from [-magnitude, magnitude]
  std::int64_t denominator = 7;
};

/// Random non-attacking placement whose arrangement is generic.
Placement random_generic_placement(std::size_t q, const MoveSet& moves, std::mt19937_64& rng,
                                   const RandomPlacementOptions& options = {});

/// Random non-attacking placement in which one line of the last rider passes
/// through a crossing of two other riders' lines. Needs q >= 3 and r >= 3.
Placement random_concurrent_placement(std::size_t q, const MoveSet& moves, std::mt19937_64& rng,
                                      const RandomPlacementOptions& options = {});

struct SpaceAudit {
  std::size_t q = 0;
  std::size_t r = 0;
  std::size_t expected = 0;  // spaces_closed(q, r)
  std::size_t trials = 0;
  std::size_t matches = 0;
  std::vector<std::size_t> generic_counts;
  std::vector<std::size_t> concurrent_counts;  // empty when no concurrence is possible
  bool concurrence_possible = false;
  bool all_concurrent_smaller = true;
};

SpaceAudit lemma2_audit(std::size_t q, const MoveSet& moves, std::size_t trials, std::uint64_t seed,
                        std::size_t concurrent_trials = 10);

struct RecordingAudit {
  std::size_t q = 0;
  std::size_t r = 0;
  std::size_t trials = 0;
  std::size_t collisions = 0;  // placements whose q! recordings are not pairwise distinct
  std::vector<Signature> colliding;
};

/// Checks that the q! recordings of random generic placements are pairwise distinct.
RecordingAudit lemma1_audit(std::size_t q, const MoveSet& moves, std::size_t trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Extension census

struct ExtensionCensus {
  std::size_t q = 0;
  std::size_t r = 0;
  std::size_t chambers = 0;  // q-rider chambers sampled
  std::size_t samples = 0;
  /// Sum over q-rider chambers of the distinct extensions seen in its samples.
  /// Never exceeds the (q+1)-rider chamber count.
  std::size_t extended_chambers = 0;
};

/// Samples every q-rider chamber and collects the extensions of the samples.
/// Chamber k is sampled with seed `seed + k`, so the result is independent of
/// `workers`.
ExtensionCensus extension_census(std::size_t q, const MoveSet& moves, std::size_t samples_per_chamber,
                                 std::uint64_t seed, std::size_t workers = 1);

}  // namespace riders
