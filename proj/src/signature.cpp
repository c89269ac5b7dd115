#include "riders/signature.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "riders/errors.hpp"

namespace riders {

namespace {

std::size_t pieces_for_length(std::size_t length) {
  std::size_t q = 1;
  while (pair_count(q) < length) ++q;
  if (pair_count(q) != length)
    throw InvalidArgument("signature length " + std::to_string(length) + " is not q(q-1)/2 for any q");
  return q;
}

}  // namespace

Signature::Signature(std::vector<int> entries, std::size_t r) : entries_(std::move(entries)), r_(r) {
  if (r == 0) throw InvalidArgument("signature needs r >= 1");
  q_ = pieces_for_length(entries_.size());
  const int max_label = static_cast<int>(2 * r);
  for (int label : entries_)
    if (label < 1 || label > max_label)
      throw InvalidArgument("region label " + std::to_string(label) + " outside [1, " + std::to_string(max_label) + "]");
}

int Signature::seen_from(std::size_t observer, std::size_t target) const {
  if (observer < target) return at(observer, target);
  return antipodal_label(at(target, observer), r_);
}

std::string Signature::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out << ',';
    out << entries_[k];
  }
  out << ')';
  return out.str();
}

Signature parse_signature(std::string_view text, std::size_t r) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw InvalidArgument("signature '" + std::string(text) + "' must look like (1,6,5)");
  text = text.substr(1, text.size() - 2);
  std::vector<int> entries;
  if (!text.empty()) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string item(text.substr(start, end - start));
      try {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        while (used < item.size() && item[used] == ' ') ++used;
        if (used != item.size()) throw std::invalid_argument("trailing");
        entries.push_back(v);
      } catch (const std::exception&) {
        throw InvalidArgument("signature entry '" + item + "' is not an integer");
      }
      start = end + 1;
    }
  }
  return Signature(std::move(entries), r);
}

bool is_permutation(std::span<const std::size_t> perm, std::size_t q) {
  if (perm.size() != q) return false;
  std::vector<bool> seen(q + 1, false);
  for (std::size_t p : perm) {
    if (p < 1 || p > q || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

Signature relabel_signature(const Signature& sig, std::span<const std::size_t> perm) {
  const std::size_t q = sig.q();
  if (!is_permutation(perm, q)) throw InvalidArgument("relabeling is not a permutation of [1.." + std::to_string(q) + "]");
  std::vector<int> out(sig.entries().size());
  for (std::size_t i = 2; i <= q; ++i)
    for (std::size_t j = 1; j < i; ++j) out[pair_slot(j, i)] = sig.seen_from(perm[j - 1], perm[i - 1]);
  return Signature(std::move(out), sig.r());
}

Permutation compose(std::span<const std::size_t> first, std::span<const std::size_t> second) {
  Permutation out(second.size());
  for (std::size_t a = 0; a < second.size(); ++a) out[a] = first[second[a] - 1];
  return out;
}

std::vector<Permutation> all_permutations(std::size_t q) {
  Permutation p(q);
  std::iota(p.begin(), p.end(), std::size_t{1});
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

CanonicalForm canonical_form(const Signature& sig, std::size_t limit) {
  const std::size_t q = sig.q();
  if (q > limit)
    throw ResourceError("canonicalization of q=" + std::to_string(q) + " exceeds the factorial limit " +
                        std::to_string(limit));
  Permutation p(q);
  std::iota(p.begin(), p.end(), std::size_t{1});
  const std::size_t slots = sig.entries().size();
  std::vector<int> best = sig.entries();
  std::vector<int> cur(slots);
  std::size_t fixed = 0;
  do {
    for (std::size_t i = 2; i <= q; ++i)
      for (std::size_t j = 1; j < i; ++j) cur[pair_slot(j, i)] = sig.seen_from(p[j - 1], p[i - 1]);
    if (cur == sig.entries()) ++fixed;
    if (cur < best) best = cur;
  } while (std::next_permutation(p.begin(), p.end()));
  return {Signature(std::move(best), sig.r()), fixed};
}

Signature canonicalize_signature(const Signature& sig, std::size_t limit) {
  return canonical_form(sig, limit).canonical;
}

Signature signature_of(std::span<const Point> placement, const MoveSet& moves) {
  require_non_attacking(placement, moves);
  const std::size_t q = placement.size();
  std::vector<int> entries(pair_count(q));
  for (std::size_t i = 2; i <= q; ++i)
    for (std::size_t j = 1; j < i; ++j) entries[pair_slot(j, i)] = region_of(placement[j - 1], placement[i - 1], moves);
  return Signature(std::move(entries), moves.size());
}

}  // namespace riders
