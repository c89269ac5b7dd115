#pragma once

// Recordings of combinatorial types: the list of pairwise region labels,
// relabeling under piece permutations, and the canonical representative.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "riders/geometry.hpp"

namespace riders {

/// 0-based slot of the ordered pair (j, i), 1 <= j < i <= q.
constexpr std::size_t pair_slot(std::size_t j, std::size_t i) { return (i - 1) * (i - 2) / 2 + (j - 1); }

constexpr std::size_t pair_count(std::size_t q) { return q * (q - 1) / 2; }

/// Recording of a placement: the entry for pair (j, i), j < i, is the region
/// of rider i as seen from rider j.
class Signature {
 public:
  /// Throws InvalidArgument unless the length is triangular and every label is in [1, 2r].
  Signature(std::vector<int> entries, std::size_t r);

  std::size_t q() const { return q_; }
  std::size_t r() const { return r_; }
  const std::vector<int>& entries() const { return entries_; }

  int at(std::size_t j, std::size_t i) const { return entries_[pair_slot(j, i)]; }
  /// Region of rider `target` seen from rider `observer`, either order.
  int seen_from(std::size_t observer, std::size_t target) const;

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature& a, const Signature& b) { return a.entries_ <=> b.entries_; }

 private:
  std::vector<int> entries_;
  std::size_t q_ = 1;
  std::size_t r_ = 1;
};

/// Parses "(1,6,5)"; "()" is the single-rider signature.
Signature parse_signature(std::string_view text, std::size_t r);

/// 1-based piece order: new piece a is old piece perm[a-1].
using Permutation = std::vector<std::size_t>;

bool is_permutation(std::span<const std::size_t> perm, std::size_t q);

/// Record `sig` again with pieces taken in the order `perm`.
/// Throws InvalidArgument when perm is not a bijection on [1..q].
Signature relabel_signature(const Signature& sig, std::span<const std::size_t> perm);

/// Order obtained by recording with `first` and then recording the result with `second`:
/// relabel(relabel(s, first), second) == relabel(s, compose(first, second)).
Permutation compose(std::span<const std::size_t> first, std::span<const std::size_t> second);

/// Default upper limit on q for the q! brute-force canonicalization.
inline constexpr std::size_t kCanonicalizeLimit = 7;

/// Lexicographically smallest relabeling over all q! piece orders.
/// Throws ResourceError when q > limit.
Signature canonicalize_signature(const Signature& sig, std::size_t limit = kCanonicalizeLimit);

/// Canonical form plus the number of permutations fixing `sig` (1 when the action is free).
struct CanonicalForm {
  Signature canonical;
  std::size_t stabilizer_size;
};
CanonicalForm canonical_form(const Signature& sig, std::size_t limit = kCanonicalizeLimit);

/// Throws AttackingError naming the offending pair and direction.
Signature signature_of(std::span<const Point> placement, const MoveSet& moves);

/// Every 1-based permutation of [1..q] in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t q);

}  // namespace riders
