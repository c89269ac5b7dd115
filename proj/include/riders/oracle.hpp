#pragma once

// Ground-truth enumeration of combinatorial types.
//
// With rider 1 pinned at the origin, the remaining 2(q-1) coordinates span a
// space in which every pair (j, i) and move m contributes the homogeneous
// linear form det(d_m, P_i - P_j). A recording of a type is exactly a
// realizable strict sign vector of these forms (a chamber). Chambers are
// enumerated depth-first in form order, pruning each prefix with an exact LP.

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "riders/errors.hpp"
#include "riders/geometry.hpp"
#include "riders/signature.hpp"

namespace riders {

struct LinearForm {
  std::size_t j = 0;  // observer rider, 1-based
  std::size_t i = 0;  // target rider, 1-based, j < i
  std::size_t m = 0;  // move index into MoveSet::directions()
  std::vector<std::int64_t> coeffs;
};

struct ConstraintSystem {
  std::size_t q = 0;
  MoveSet moves;
  std::size_t dimension = 0;
  std::vector<LinearForm> forms;  // ordered by (i, j, m)
};

/// Throws InvalidArgument for q < 2.
ConstraintSystem build_constraints(std::size_t q, const MoveSet& moves);

/// Coordinates (x2, y2, ..., xq, yq) to a placement with rider 1 at the origin.
Placement placement_from_coordinates(std::span<const Rational> coords);

/// Point x with sign_k * form_k(x) >= 1 for every assigned k, or nullopt.
std::optional<std::vector<Rational>> strict_feasible(const ConstraintSystem& system,
                                                     std::span<const std::int8_t> partial_signs);

/// Signs of all forms for a full chamber, converted to pairwise region labels.
Signature signature_of_signs(const ConstraintSystem& system, std::span<const std::int8_t> signs);
/// Inverse: the chamber sign vector recording `sig`.
SignPattern signs_of_signature(const ConstraintSystem& system, const Signature& sig);

struct EnumerationOptions {
  /// Reuse the parent's witness for the branch it already satisfies.
  bool witness_shortcut = true;
  /// Maximum number of LP solves; 0 means unlimited.
  std::size_t lp_budget = 0;
  std::size_t workers = 1;
};

struct Chamber {
  SignPattern signs;
  std::vector<Rational> witness;
};

struct EnumerationStats {
  std::size_t chamber_count = 0;
  std::size_t lp_calls = 0;
  bool complete = true;
};

/// Feasible sign prefix with a strictly interior witness; the unit of parallel work.
struct Subtree {
  SignPattern prefix;
  std::vector<Rational> witness;
};

using ChamberVisitor = std::function<void(const SignPattern&, const std::vector<Rational>&)>;

/// Raised when an enumeration runs out of LP budget; the counts are partial.
class BudgetExhausted : public ResourceError {
 public:
  BudgetExhausted(std::size_t partial_chambers, std::size_t lp_calls);
  std::size_t partial_chambers() const { return partial_chambers_; }
  std::size_t lp_calls() const { return lp_calls_; }

 private:
  std::size_t partial_chambers_;
  std::size_t lp_calls_;
};

/// Shared LP counter; throws ResourceError once `budget` (nonzero) is exceeded.
class LpBudget {
 public:
  explicit LpBudget(std::size_t budget) : budget_(budget) {}
  void charge();
  std::size_t used() const { return used_.load(); }
  bool exhausted() const { return budget_ != 0 && used_.load() > budget_; }

 private:
  std::size_t budget_;
  std::atomic<std::size_t> used_{0};
};

/// Feasible prefixes of length `depth`, in depth-first order.
std::vector<Subtree> split_chambers(const ConstraintSystem& system, std::size_t depth, const EnumerationOptions& options,
                                    LpBudget& budget);

/// Depth-first enumeration below `root`; returns the number of chambers visited.
std::size_t enumerate_subtree(const ConstraintSystem& system, const Subtree& root, const EnumerationOptions& options,
                              LpBudget& budget, const ChamberVisitor& visit);

/// All chambers, single-threaded, in depth-first order with '+' before '-'.
/// Throws ResourceError when the LP budget runs out.
EnumerationStats enumerate_chambers(const ConstraintSystem& system, const EnumerationOptions& options = {},
                                    const ChamberVisitor& visit = {});

/// Chambers collected across `options.workers` threads, in depth-first order.
std::vector<Chamber> collect_chambers(const ConstraintSystem& system, const EnumerationOptions& options = {});

struct CensusOptions {
  EnumerationOptions enumeration;
  /// Unlocks q = 5, r = 3 and q = 4, r <= 6.
  bool stretch = false;
  bool keep_signatures = false;
};

struct TypeCensus {
  std::size_t q = 0;
  std::size_t r = 0;
  std::string moveset;
  std::size_t chamber_count = 0;
  std::size_t type_count = 0;
  std::size_t lp_calls = 0;
  std::vector<Signature> freeness_violations;
  std::vector<Signature> canonical_signatures;  // sorted; filled when keep_signatures
};

/// Throws ResourceError for sizes beyond the tractability limits or an exhausted
/// LP budget; the error carries the partial chamber count in its message.
TypeCensus census(std::size_t q, const MoveSet& moves, const CensusOptions& options = {});

bool census_tractable(std::size_t q, std::size_t r, bool stretch);

/// Exact placement (rider 1 at the origin) recording exactly `sig`.
/// Throws InfeasibleError when no placement realizes it.
Placement realize_type(const Signature& sig, const MoveSet& moves);

struct SandwichReport {
  Rational t_lower;
  Rational t_upper;
  std::size_t type_count = 0;
  Rational lower_slack;  // type_count - t_lower
  Rational upper_slack;  // t_upper - type_count
  bool holds = false;
  bool divisible = false;  // chamber_count == q! * type_count
  bool free_action = false;
};

SandwichReport sandwich_check(const TypeCensus& census);

}  // namespace riders
