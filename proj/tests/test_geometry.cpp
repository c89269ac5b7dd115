#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "riders/errors.hpp"
#include "riders/geometry.hpp"
#include "riders/signature.hpp"

using namespace riders;

namespace {

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Floating-point oracle: sector index by sorting ray angles measured
// clockwise from the reference ray.
int angle_oracle(const Point& observer, const Point& target, const MoveSet& moves) {
  auto cw = [](double dx, double dy) {
    double a = std::atan2(dx, dy);
    return a < 0 ? a + 2 * std::numbers::pi : a;
  };
  const Direction& ref = moves.direction(moves.reference_index());
  const double base = cw(static_cast<double>(ref.dx()), static_cast<double>(ref.dy()));
  auto rel = [&](double a) {
    double d = a - base;
    while (d < 0) d += 2 * std::numbers::pi;
    while (d >= 2 * std::numbers::pi) d -= 2 * std::numbers::pi;
    return d;
  };
  std::vector<double> rays;
  for (const Direction& d : moves.directions()) {
    rays.push_back(rel(cw(static_cast<double>(d.dx()), static_cast<double>(d.dy()))));
    rays.push_back(rel(cw(static_cast<double>(-d.dx()), static_cast<double>(-d.dy()))));
  }
  std::sort(rays.begin(), rays.end());
  const Point v = target - observer;
  const double t = rel(cw(v.x.get_d(), v.y.get_d()));
  return static_cast<int>(std::count_if(rays.begin(), rays.end(), [&](double a) { return a < t; }));
}

std::vector<MoveSet> sample_movesets() {
  return {rook_moveset(),
          queen_moveset(),
          default_moveset(3),
          default_moveset(5),
          default_moveset(6),
          parse_moveset("1,0;1,1"),
          parse_moveset("2,1;1,-3;0,1"),
          parse_moveset("1,2;3,1;-1,1;5,-2"),
          MoveSet({Direction(1, 1)})};
}

}  // namespace

TEST_CASE("normalize_direction") {
  CHECK(normalize_direction(2, 4) == Direction(1, 2));
  CHECK(normalize_direction(0, -3) == Direction(0, 1));
  CHECK(normalize_direction(-2, -2) == Direction(1, 1));
  CHECK(normalize_direction(-5, 0) == Direction(1, 0));
  CHECK(Direction(3, -6).dx() == -1);
  CHECK(Direction(3, -6).dy() == 2);
  CHECK_THROWS_AS(normalize_direction(0, 0), InvalidArgument);
}

TEST_CASE("normalization is invariant under negation and scaling") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const long dx = static_cast<long>(rng() % 41) - 20;
    const long dy = static_cast<long>(rng() % 41) - 20;
    if (dx == 0 && dy == 0) continue;
    const long k = 1 + static_cast<long>(rng() % 9);
    CHECK(normalize_direction(dx, dy) == normalize_direction(-dx, -dy));
    CHECK(normalize_direction(dx, dy) == normalize_direction(k * dx, k * dy));
  }
}

TEST_CASE("side_sign") {
  CHECK(side_sign(pt(0, 0), Direction(0, 1), pt(1, 5)) == -1);
  CHECK(side_sign(pt(0, 0), Direction(1, 1), pt(2, 2)) == 0);
  CHECK(side_sign(pt(0, 0), Direction(1, 0), pt(3, -2)) == -1);
  CHECK(side_sign(pt(0, 0), Direction(1, 0), pt(3, 2)) == 1);
  CHECK(side_sign(Point{Rational(1, 3), Rational(0)}, Direction(0, 1), Point{Rational(1, 3), Rational(7)}) == 0);
}

TEST_CASE("is_attacking") {
  const MoveSet queen = queen_moveset();
  CHECK(is_attacking(pt(0, 0), pt(3, 3), queen));
  CHECK_FALSE(is_attacking(pt(0, 0), pt(1, 2), queen));
  CHECK_FALSE(is_attacking(pt(0, 0), pt(5, 0), MoveSet({Direction(0, 1)})));
  CHECK(is_attacking(pt(2, 1), pt(-4, 1), queen));
  CHECK_THROWS_AS(is_attacking(pt(1, 1), pt(1, 1), queen), AttackingError);
}

TEST_CASE("moveset parsing and validation") {
  CHECK(parse_moveset("queen") == parse_moveset("0,1;1,1;1,0;1,-1"));
  CHECK(parse_moveset("rook") == parse_moveset("1,0;0,1"));
  CHECK(parse_moveset("queen").size() == 4);
  CHECK(parse_moveset(" 0,1 ; 1,0 ").size() == 2);
  CHECK_THROWS_AS(parse_moveset("0,1;0,2"), InvalidArgument);
  CHECK_THROWS_AS(parse_moveset("0,1;1"), InvalidArgument);
  CHECK_THROWS_AS(parse_moveset(""), InvalidArgument);
  CHECK_THROWS_AS(parse_moveset("bishop"), InvalidArgument);
  CHECK_THROWS_AS(MoveSet({}), InvalidArgument);
  for (std::size_t r = 1; r <= 8; ++r) CHECK(default_moveset(r).size() == r);
  CHECK(default_moveset(4) == queen_moveset());
  CHECK(default_moveset(2) == rook_moveset());
}

TEST_CASE("reference direction") {
  CHECK(queen_moveset().direction(0) == Direction(0, 1));
  // Without a vertical move the direction of largest angle leads.
  CHECK(parse_moveset("1,0;1,1").direction(0) == Direction(1, 1));
  CHECK(parse_moveset("1,0;1,1").direction(1) == Direction(1, 0));
  CHECK(region_of(pt(0, 0), pt(2, 1), parse_moveset("1,0;1,1")) == 1);
}

TEST_CASE("region_of examples") {
  const MoveSet queen = queen_moveset();
  const MoveSet three = default_moveset(3);
  CHECK(region_of(pt(0, 0), pt(1, 3), queen) == 1);
  CHECK(region_of(pt(0, 0), pt(-1, 3), queen) == 8);
  CHECK(region_of(pt(0, 0), pt(1, 3), three) == 1);
  CHECK(region_of(pt(1, 3), pt(0, 0), three) == 4);
  CHECK(region_of(pt(0, 0), pt(3, 1), queen) == 2);
  CHECK(region_of(pt(0, 0), pt(3, -1), queen) == 3);
  CHECK(region_of(pt(0, 0), pt(1, -3), queen) == 4);
  CHECK(region_of(pt(0, 0), pt(-1, -3), queen) == 5);
  CHECK_THROWS_AS(region_of(pt(0, 0), pt(0, 4), queen), AttackingError);
  CHECK_THROWS_AS(region_of(pt(0, 0), pt(0, 0), queen), AttackingError);
}

TEST_CASE("single-move riders see two half planes") {
  const MoveSet vertical({Direction(0, 1)});
  CHECK(region_of(pt(0, 0), pt(1, 5), vertical) == 1);
  CHECK(region_of(pt(0, 0), pt(-1, 5), vertical) == 2);
  CHECK(region_of(pt(0, 0), pt(1, -5), vertical) == 1);
}

TEST_CASE("region_of agrees with a floating-point angle sort") {
  std::mt19937_64 rng(5);
  for (const MoveSet& moves : sample_movesets()) {
    if (moves.size() == 1) continue;
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
      const Point a = pt(static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 201) - 100);
      const Point b = pt(static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 201) - 100);
      if (a == b || is_attacking(a, b, moves)) continue;
      CHECK(region_of(a, b, moves) == angle_oracle(a, b, moves));
      ++checked;
    }
    CHECK(checked > 200);
  }
}

TEST_CASE("antipodality") {
  std::mt19937_64 rng(9);
  for (const MoveSet& moves : sample_movesets()) {
    const std::size_t r = moves.size();
    for (int t = 0; t < 300; ++t) {
      const Point a = pt(static_cast<long>(rng() % 61) - 30, static_cast<long>(rng() % 61) - 30);
      const Point b = pt(static_cast<long>(rng() % 61) - 30, static_cast<long>(rng() % 61) - 30);
      if (a == b || is_attacking(a, b, moves)) continue;
      CHECK(region_of(a, b, moves) == antipodal_label(region_of(b, a, moves), r));
    }
    for (int label = 1; label <= static_cast<int>(2 * r); ++label)
      CHECK(antipodal_label(antipodal_label(label, r), r) == label);
  }
}

TEST_CASE("sign patterns of the ray fan are a bijection onto the labels") {
  for (const MoveSet& moves : sample_movesets()) {
    const std::size_t r = moves.size();
    std::set<SignPattern> seen;
    for (int label = 1; label <= static_cast<int>(2 * r); ++label) {
      const SignPattern& p = moves.pattern_of_label(label);
      CHECK(p.size() == r);
      CHECK(moves.label_of_pattern(p) == label);
      seen.insert(p);
      const Ray s = moves.sector_sample(label);
      CHECK(region_of(pt(0, 0), pt(s.dx, s.dy), moves) == label);
    }
    CHECK(seen.size() == 2 * r);

    // A fine fan of targets lands only in the 2r realizable patterns.
    std::set<SignPattern> swept;
    for (int k = 0; k < 720; ++k) {
      const double a = (k + 0.5) * std::numbers::pi / 360;
      const Point target{Rational(static_cast<long>(std::lround(1e6 * std::sin(a)))),
                         Rational(static_cast<long>(std::lround(1e6 * std::cos(a))))};
      if (is_attacking(pt(0, 0), target, moves)) continue;
      SignPattern p;
      for (const Direction& d : moves.directions()) p.push_back(static_cast<std::int8_t>(side_sign(pt(0, 0), d, target)));
      CHECK(moves.label_of_pattern(p) == region_of(pt(0, 0), target, moves));
      swept.insert(p);
    }
    CHECK(swept == seen);
    if (r >= 2) {
      std::size_t realizable = 0;
      for (unsigned mask = 0; mask < (1u << r); ++mask) {
        SignPattern p;
        for (std::size_t m = 0; m < r; ++m) p.push_back((mask >> m) & 1 ? 1 : -1);
        realizable += moves.label_of_pattern(p) != 0;
      }
      CHECK(realizable == 2 * r);
    }
  }
}

TEST_CASE("signature_of is invariant under translation and positive scaling") {
  std::mt19937_64 rng(3);
  const MoveSet moves = queen_moveset();
  for (int t = 0; t < 100; ++t) {
    Placement p;
    while (p.size() < 4) {
      Point c = pt(static_cast<long>(rng() % 101) - 50, static_cast<long>(rng() % 101) - 50);
      bool ok = std::none_of(p.begin(), p.end(), [&](const Point& o) { return o == c || is_attacking(o, c, moves); });
      if (ok) p.push_back(c);
    }
    const Signature base = signature_of(p, moves);
    const Point shift{frac(static_cast<long>(rng() % 50), 7), frac(-static_cast<long>(rng() % 50), 3)};
    const Rational scale = frac(1 + static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 20));
    const Point center = pt(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 11) - 5);
    Placement moved, scaled;
    for (const Point& q : p) {
      moved.push_back(q + shift);
      scaled.push_back(center + scale * (q - center));
    }
    CHECK(signature_of(moved, moves) == base);
    CHECK(signature_of(scaled, moves) == base);
  }
}

TEST_CASE("require_non_attacking names the pair") {
  const MoveSet queen = queen_moveset();
  require_non_attacking(Placement{pt(0, 0), pt(1, 2), pt(3, 1)}, queen);
  try {
    require_non_attacking(Placement{pt(0, 0), pt(1, 2), pt(3, 3)}, queen);
    FAIL("expected AttackingError");
  } catch (const AttackingError& e) {
    const std::string what = e.what();
    CHECK(what.find('1') != std::string::npos);
    CHECK(what.find('3') != std::string::npos);
  }
}
