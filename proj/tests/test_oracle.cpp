#include <doctest.h>

#include <set>

#include "riders/errors.hpp"
#include "riders/oracle.hpp"

using namespace riders;

namespace {

// Placement realizing a chamber witness, re-recorded by plain geometry.
Signature witness_signature(const ConstraintSystem& system, const std::vector<Rational>& witness) {
  return signature_of(placement_from_coordinates(witness), system.moves);
}

}  // namespace

TEST_CASE("constraint system shape") {
  CHECK(build_constraints(2, queen_moveset()).forms.size() == 4);
  CHECK(build_constraints(2, queen_moveset()).dimension == 2);
  CHECK(build_constraints(3, default_moveset(3)).forms.size() == 9);
  CHECK(build_constraints(3, default_moveset(3)).dimension == 4);
  CHECK(build_constraints(4, queen_moveset()).forms.size() == 24);
  CHECK(build_constraints(4, queen_moveset()).dimension == 6);
  CHECK_THROWS_AS(build_constraints(1, queen_moveset()), InvalidArgument);

  const ConstraintSystem s = build_constraints(3, default_moveset(3));
  for (std::size_t k = 1; k < s.forms.size(); ++k) {
    const LinearForm& a = s.forms[k - 1];
    const LinearForm& b = s.forms[k];
    CHECK(std::tie(a.i, a.j, a.m) < std::tie(b.i, b.j, b.m));
  }
  for (const LinearForm& f : s.forms)
    CHECK(std::any_of(f.coeffs.begin(), f.coeffs.end(), [](std::int64_t c) { return c != 0; }));
}

TEST_CASE("strict feasibility") {
  const MoveSet queen = queen_moveset();
  const ConstraintSystem s = build_constraints(2, queen);
  auto empty = strict_feasible(s, {});
  REQUIRE(empty.has_value());
  CHECK(empty->size() == 2);

  const SignPattern& sector1 = queen.pattern_of_label(1);
  auto w = strict_feasible(s, sector1);
  REQUIRE(w.has_value());
  CHECK(witness_signature(s, *w).to_string() == "(1)");

  // A full pattern no sector has.
  SignPattern impossible{1, -1, 1, -1};
  if (queen.label_of_pattern(impossible) == 0) CHECK_FALSE(strict_feasible(s, impossible).has_value());

  // P2 and P3 in sector 1 of P1, P3 in sector 5 of P2: realizable.
  const ConstraintSystem three = build_constraints(3, queen);
  SignPattern pattern;
  auto set_pairs = [&](int l12, int l13, int l23) {
    pattern.clear();
    for (int label : {l12, l13, l23}) {
      const SignPattern& p = queen.pattern_of_label(label);
      pattern.insert(pattern.end(), p.begin(), p.end());
    }
  };
  set_pairs(1, 1, 5);
  CHECK(strict_feasible(three, pattern).has_value());
  // P3 below P1 yet above P2, which is above P1.
  set_pairs(1, 5, 1);
  CHECK_FALSE(strict_feasible(three, pattern).has_value());
}

TEST_CASE("two riders: 2r chambers") {
  for (std::size_t r = 1; r <= 6; ++r) {
    const MoveSet moves = default_moveset(r);
    const TypeCensus c = census(2, moves);
    CHECK(c.chamber_count == 2 * r);
    CHECK(c.type_count == r);
  }
  const TypeCensus odd = census(2, parse_moveset("2,1;1,-3;0,1;5,2"));
  CHECK(odd.chamber_count == 8);
}

TEST_CASE("three riders: closed forms for every tested moveset") {
  std::vector<MoveSet> sets;
  for (std::size_t r = 2; r <= 6; ++r) sets.push_back(default_moveset(r));
  sets.push_back(parse_moveset("2,1;1,-3;0,1"));
  sets.push_back(parse_moveset("1,2;3,1;-1,1;5,-2"));
  sets.push_back(parse_moveset("1,0;1,1"));
  for (const MoveSet& moves : sets) {
    const std::size_t r = moves.size();
    const TypeCensus c = census(3, moves);
    CHECK(c.chamber_count == 2 * r * (r * r + 3 * r - 1));
    CHECK(c.type_count == r * (r * r + 3 * r - 1) / 3);
    CHECK(c.freeness_violations.empty());
  }
}

TEST_CASE("witness shortcut and worker count never change the chambers") {
  for (auto [q, moves] : {std::pair{3u, queen_moveset()}, std::pair{4u, default_moveset(3)}}) {
    const ConstraintSystem s = build_constraints(q, moves);
    const auto plain = collect_chambers(s, {.witness_shortcut = false});
    const auto fast = collect_chambers(s, {.witness_shortcut = true});
    const auto parallel = collect_chambers(s, {.witness_shortcut = true, .workers = 3});
    REQUIRE(plain.size() == fast.size());
    REQUIRE(fast.size() == parallel.size());
    for (std::size_t k = 0; k < fast.size(); ++k) {
      CHECK(plain[k].signs == fast[k].signs);
      CHECK(fast[k].signs == parallel[k].signs);
      CHECK(fast[k].witness == parallel[k].witness);
    }
    CHECK(enumerate_chambers(s).chamber_count == fast.size());
  }
}

TEST_CASE("every chamber witness reproduces its own recording") {
  const ConstraintSystem s = build_constraints(3, default_moveset(3));
  std::set<Signature> seen;
  for (const Chamber& c : collect_chambers(s)) {
    const Signature sig = signature_of_signs(s, c.signs);
    CHECK(witness_signature(s, c.witness) == sig);
    CHECK(signs_of_signature(s, sig) == c.signs);
    seen.insert(sig);
  }
  CHECK(seen.size() == 102);
}

TEST_CASE("brute force over all label triples finds exactly the chambers") {
  const MoveSet moves = default_moveset(3);
  const ConstraintSystem s = build_constraints(3, moves);
  std::size_t realizable = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c) {
        const Signature sig({a, b, c}, 3);
        const bool feasible = strict_feasible(s, signs_of_signature(s, sig)).has_value();
        realizable += feasible;
        if (feasible) {
          CHECK(signature_of(realize_type(sig, moves), moves) == sig);
        } else {
          CHECK_THROWS_AS(realize_type(sig, moves), InfeasibleError);
        }
      }
  CHECK(realizable == 102);
}

TEST_CASE("realize_type") {
  const MoveSet queen = queen_moveset();
  const Placement one = realize_type(parse_signature("(1)", 4), queen);
  CHECK(one[0] == Point{0, 0});
  CHECK(region_of(one[0], one[1], queen) == 1);
  const MoveSet three = default_moveset(3);
  CHECK(signature_of(realize_type(parse_signature("(1,6,5)", 3), three), three).to_string() == "(1,6,5)");
  CHECK_THROWS_AS(realize_type(parse_signature("(1,5,1)", 3), three), InfeasibleError);
  CHECK_THROWS_AS(realize_type(parse_signature("(1,6,5)", 3), queen), InvalidArgument);
}

TEST_CASE("census and sandwich at q = 4, r = 3") {
  const TypeCensus c = census(4, default_moveset(3), {.keep_signatures = true});
  CHECK(c.chamber_count == 3624);
  CHECK(c.type_count == 151);
  CHECK(c.canonical_signatures.size() == 151);
  CHECK(std::is_sorted(c.canonical_signatures.begin(), c.canonical_signatures.end()));
  const SandwichReport s = sandwich_check(c);
  CHECK(s.holds);
  CHECK(s.divisible);
  CHECK(s.free_action);
  CHECK(s.t_lower == Rational(289, 2));
  CHECK(s.t_upper == 289);
  CHECK(s.lower_slack == Rational(13, 2));
}

TEST_CASE("budget and tractability") {
  CensusOptions tight;
  tight.enumeration.lp_budget = 10;
  CHECK_THROWS_AS(census(3, queen_moveset(), tight), BudgetExhausted);
  try {
    census(3, queen_moveset(), tight);
  } catch (const BudgetExhausted& e) {
    CHECK(e.lp_calls() > 10);
    CHECK(e.partial_chambers() < 216);
  }
  CHECK_THROWS_AS(census(6, default_moveset(3)), ResourceError);
  CHECK_THROWS_AS(census(5, default_moveset(3)), ResourceError);
  CHECK(census_tractable(5, 3, true));
  CHECK_FALSE(census_tractable(5, 4, true));
  CHECK(census_tractable(4, 4, false));
  const TypeCensus single = census(1, queen_moveset());
  CHECK(single.chamber_count == 1);
  CHECK(single.type_count == 1);
}
