#pragma once

// Closed-form space counts and the lower/upper bounds on the number of
// combinatorial types of q riders with r moves. All arithmetic is exact.

#include <optional>
#include <string>
#include <vector>

#include "riders/rational.hpp"

namespace riders {

/// Spaces of a generic placement via the one-rider-at-a-time recurrence,
/// starting from 2r sectors around a single rider.
/// Throws InvalidArgument for q == 0 or r == 0.
Integer spaces_recurrence(unsigned q, unsigned r);

/// Same count in closed form: q(q+1)/2 (r^2 - r) + q(-r^2 + 3r - 1) + 1.
Integer spaces_closed(unsigned q, unsigned r);

/// Product of spaces_closed(n, r) for n = 1..q-1 (1 when q == 1).
Integer permutations_lower(unsigned q, unsigned r);

/// r(r-1)(r-2)(q-2)(q-3)/2, literal for every input (q = 1 gives a positive value).
Integer problem_spaces(unsigned q, unsigned r);

/// permutations_lower / q!.
Rational t_lower(unsigned q, unsigned r);

/// True when the upper bound carries problem-space terms: q >= 4 and r >= 3.
bool upper_applicable(unsigned q, unsigned r);

/// (1/q!) prod_{n=1}^{q-1} [spaces_closed(n, r) + r(r-1)(r-2)(n-2)(n-3)/2] when
/// applicable, t_lower otherwise. The n = 1 factor keeps its extra term.
Rational t_upper(unsigned q, unsigned r);

/// Published enumeration values shown alongside the bounds; not computed here.
struct ExternalReference {
  Integer value;
  bool queen_only;
  std::string source;
};
std::optional<ExternalReference> external_reference(unsigned q, unsigned r);

struct BoundsReport {
  unsigned q = 1;
  unsigned r = 1;
  Integer spaces;
  Integer permutations_lower;
  Integer problem_spaces;
  Rational t_lower;
  Rational t_upper;
  bool upper_applicable = false;
  std::optional<ExternalReference> reference;
};

BoundsReport bounds_report(unsigned q, unsigned r);

/// Row-major grid, q = 1..q_max outer, r = 1..r_max inner.
std::vector<BoundsReport> generate_table(unsigned q_max, unsigned r_max);

/// Text carried with every upper bound explaining the n = 1 factor.
extern const char* const kUpperBoundNote;

}  // namespace riders
