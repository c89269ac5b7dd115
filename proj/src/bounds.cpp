#include "riders/bounds.hpp"

#include "riders/errors.hpp"

namespace riders {

const char* const kUpperBoundNote =
    "upper product includes the problem-space term r(r-1)(r-2)(n-2)(n-3)/2 for every factor n = 1..q-1, "
    "including n = 1 where it equals r(r-1)(r-2)";

namespace {

void require_domain(unsigned q, unsigned r) {
  if (q == 0 || r == 0) throw InvalidArgument("q and r must be positive (got q=" + std::to_string(q) +
                                              ", r=" + std::to_string(r) + ")");
}

Integer z(long v) { return Integer(v); }

/// Extra spaces granted to factor n of the upper product.
Integer extra_term(unsigned n, unsigned r) {
  Integer rr = z(r);
  Integer nn = z(n);
  return rr * (rr - 1) * (rr - 2) * (nn - 2) * (nn - 3) / 2;
}

}  // namespace

Integer spaces_recurrence(unsigned q, unsigned r) {
  require_domain(q, r);
  Integer rr = z(r);
  Integer s = 2 * rr;
  for (unsigned n = 2; n <= q; ++n) s = (2 * rr - 1) + rr * (rr - 1) * (n - 1) + s;
  return s;
}

Integer spaces_closed(unsigned q, unsigned r) {
  require_domain(q, r);
  Integer qq = z(q);
  Integer rr = z(r);
  return qq * (qq + 1) / 2 * (rr * rr - rr) + qq * (-rr * rr + 3 * rr - 1) + 1;
}

Integer permutations_lower(unsigned q, unsigned r) {
  require_domain(q, r);
  Integer p = 1;
  for (unsigned n = 1; n < q; ++n) p *= spaces_closed(n, r);
  return p;
}

Integer problem_spaces(unsigned q, unsigned r) {
  require_domain(q, r);
  return extra_term(q, r);
}

Rational t_lower(unsigned q, unsigned r) {
  Rational t(permutations_lower(q, r), factorial(q));
  t.canonicalize();
  return t;
}

bool upper_applicable(unsigned q, unsigned r) { return q >= 4 && r >= 3; }

Rational t_upper(unsigned q, unsigned r) {
  require_domain(q, r);
  if (!upper_applicable(q, r)) return t_lower(q, r);
  Integer p = 1;
  for (unsigned n = 1; n < q; ++n) p *= spaces_closed(n, r) + extra_term(n, r);
  Rational t(p, factorial(q));
  t.canonicalize();
  return t;
}

std::optional<ExternalReference> external_reference(unsigned q, unsigned r) {
  struct Entry {
    unsigned q, r;
    long value;
    bool queen;
  };
  static constexpr Entry kTable[] = {
      {4, 3, 151, false},    {4, 4, 574, true},  {5, 3, 1899, false},
      {5, 4, 14206, true},   {6, 3, 31709, false}, {6, 4, 501552, true},
  };
  for (const Entry& e : kTable)
    if (e.q == q && e.r == r)
      return ExternalReference{Integer(e.value), e.queen, "Kotesovec, Non-attacking chess pieces, 6th ed. (2013)"};
  return std::nullopt;
}

BoundsReport bounds_report(unsigned q, unsigned r) {
  BoundsReport rep;
  rep.q = q;
  rep.r = r;
  rep.spaces = spaces_closed(q, r);
  rep.permutations_lower = permutations_lower(q, r);
  rep.problem_spaces = problem_spaces(q, r);
  rep.t_lower = t_lower(q, r);
  rep.t_upper = t_upper(q, r);
  rep.upper_applicable = upper_applicable(q, r);
  rep.reference = external_reference(q, r);
  return rep;
}

std::vector<BoundsReport> generate_table(unsigned q_max, unsigned r_max) {
  if (q_max == 0 || r_max == 0) throw InvalidArgument("table dimensions must be positive");
  std::vector<BoundsReport> out;
  out.reserve(std::size_t{q_max} * r_max);
  for (unsigned q = 1; q <= q_max; ++q)
    for (unsigned r = 1; r <= r_max; ++r) out.push_back(bounds_report(q, r));
  return out;
}

}  // namespace riders
