#include "riders/arrangement.hpp"

#include <algorithm>

#include "riders/bounds.hpp"
#include "riders/errors.hpp"
#include "riders/oracle.hpp"
#include "riders/parallel.hpp"
#include "riders/simplex.hpp"

namespace riders {

namespace {

// line value = a x + b y + c
struct Affine {
  Rational a, b, c;
};

Affine affine_of(const Line& line) {
  const long dx = line.direction.dx();
  const long dy = line.direction.dy();
  return {Rational(-dy), Rational(dx), dy * line.anchor.x - dx * line.anchor.y};
}

std::optional<Point> intersect(const Line& p, const Line& q) {
  const Ray dp{p.direction.dx(), p.direction.dy()};
  const Ray dq{q.direction.dx(), q.direction.dy()};
  const long cross = static_cast<long>(dq.dx * dp.dy - dq.dy * dp.dx);  // det(dq, dp)
  if (cross == 0) return std::nullopt;
  // p.anchor + t dp lies on q:  det(dq, p.anchor + t dp - q.anchor) = 0
  const Point diff = q.anchor - p.anchor;
  Rational t = (dq.dx * diff.y - dq.dy * diff.x) / Rational(cross);
  return Point{p.anchor.x + t * dp.dx, p.anchor.y + t * dp.dy};
}

// Maximize eps subject to sign_k * value_k(x, y) >= eps and eps <= 1.
class CellLp {
 public:
  CellLp() : lp_(3) {
    const Rational cap[3] = {0, 0, 1};
    lp_.add_row(cap, Rational(1));
  }

  void push(const Affine& f, int s) {
    const Rational row[3] = {-s * f.a, -s * f.b, Rational(1)};
    lp_.add_row(row, s * f.c);
  }
  void pop() { lp_.pop_row(); }

  std::optional<Point> interior_point() const {
    static const Rational objective[3] = {0, 0, 1};
    LpSolution sol = maximize(lp_, objective);
    if (sol.status != LpStatus::optimal || sgn(sol.objective) <= 0) return std::nullopt;
    return Point{sol.x[0], sol.x[1]};
  }

 private:
  InequalitySystem lp_;
};

class CellSearch {
 public:
  explicit CellSearch(const LineSet& lines) {
    for (const Line& l : lines) forms_.push_back(affine_of(l));
  }

  std::vector<CellWitness> run() {
    descend(Point{Rational(0), Rational(0)});
    return std::move(out_);
  }

 private:
  Rational value(std::size_t k, const Point& p) const { return forms_[k].a * p.x + forms_[k].b * p.y + forms_[k].c; }

  void descend(const Point& witness) {
    const std::size_t k = signs_.size();
    if (k == forms_.size()) {
      auto p = lp_.interior_point();
      out_.push_back({*p, signs_});
      return;
    }
    const int here = sign(value(k, witness));
    for (int s : {+1, -1}) {
      signs_.push_back(static_cast<std::int8_t>(s));
      lp_.push(forms_[k], s);
      std::optional<Point> child = here == s ? std::optional<Point>(witness) : lp_.interior_point();
      if (child) descend(*child);
      lp_.pop();
      signs_.pop_back();
    }
  }

  std::vector<Affine> forms_;
  CellLp lp_;
  SignPattern signs_;
  std::vector<CellWitness> out_;
};

Rational random_coordinate(std::mt19937_64& rng, const RandomPlacementOptions& opt) {
  const auto span = static_cast<std::uint64_t>(2 * opt.magnitude + 1);
  const auto numerator = static_cast<long>(rng() % span) - static_cast<long>(opt.magnitude);
  Rational v(numerator, opt.denominator);
  v.canonicalize();
  return v;
}

Point random_point(std::mt19937_64& rng, const RandomPlacementOptions& opt) {
  Rational x = random_coordinate(rng, opt);
  Rational y = random_coordinate(rng, opt);
  return {x, y};
}

bool attacks_any(const Placement& placement, const Point& p, const MoveSet& moves) {
  for (const Point& other : placement)
    if (other == p || is_attacking(other, p, moves)) return true;
  return false;
}

}  // namespace

LineSet build_lines(std::span<const Point> placement, const MoveSet& moves) {
  require_non_attacking(placement, moves);
  LineSet lines;
  for (std::size_t i = 0; i < placement.size(); ++i)
    for (std::size_t m = 0; m < moves.size(); ++m) lines.push_back({moves.direction(m), placement[i], i + 1, m});
  return lines;
}

Rational line_value(const Line& line, const Point& p) {
  const Point v = p - line.anchor;
  return line.direction.dx() * v.y - line.direction.dy() * v.x;
}

std::map<std::pair<Rational, Rational>, std::vector<std::size_t>> intersection_points(const LineSet& lines) {
  std::map<std::pair<Rational, Rational>, std::vector<std::size_t>> points;
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b)
      if (auto p = intersect(lines[a], lines[b])) {
        auto& through = points[{p->x, p->y}];
        for (std::size_t idx : {a, b})
          if (std::find(through.begin(), through.end(), idx) == through.end()) through.push_back(idx);
      }
  for (auto& [p, through] : points) std::sort(through.begin(), through.end());
  return points;
}

std::size_t count_cells(const LineSet& lines) {
  std::size_t cells = 1 + lines.size();
  for (const auto& [p, through] : intersection_points(lines)) cells += through.size() - 1;
  return cells;
}

bool is_generic(const LineSet& lines, std::span<const Point> placement) {
  for (const auto& [p, through] : intersection_points(lines)) {
    if (through.size() <= 2) continue;
    const Point here{p.first, p.second};
    if (std::find(placement.begin(), placement.end(), here) == placement.end()) return false;
  }
  return true;
}

std::vector<CellWitness> enumerate_cells(const LineSet& lines) { return CellSearch(lines).run(); }

ExtensionProfile extension_profile(std::span<const Point> placement, const MoveSet& moves) {
  ExtensionProfile profile{signature_of(placement, moves), {}, {}};
  for (const CellWitness& cell : enumerate_cells(build_lines(placement, moves))) {
    Extension ext;
    ext.reserve(placement.size());
    for (const Point& rider : placement) ext.push_back(region_of(rider, cell.point, moves));
    profile.witnesses.emplace(ext, cell.point);
    profile.extensions.insert(std::move(ext));
  }
  return profile;
}

Signature extend_signature(const Signature& base, const Extension& extension) {
  if (extension.size() != base.q()) throw InvalidArgument("extension length must equal the base piece count");
  std::vector<int> entries = base.entries();
  entries.insert(entries.end(), extension.begin(), extension.end());
  return Signature(std::move(entries), base.r());
}

std::vector<Placement> sample_chamber(const Signature& sig, const MoveSet& moves, std::size_t count,
                                      std::uint64_t seed) {
  if (sig.r() != moves.size()) throw InvalidArgument("signature and moveset disagree on r");
  if (count == 0) return {};
  if (sig.q() == 1) return {Placement{{Rational(0), Rational(0)}}};

  const ConstraintSystem system = build_constraints(sig.q(), moves);
  const SignPattern signs = signs_of_signature(system, sig);
  auto center = strict_feasible(system, signs);
  if (!center) throw InfeasibleError("signature " + sig.to_string() + " is not realizable");

  const std::size_t dim = system.dimension;
  InequalitySystem slice(dim);
  for (std::size_t k = 0; k < signs.size(); ++k) {
    std::vector<Rational> row(dim);
    for (std::size_t c = 0; c < dim; ++c) row[c] = static_cast<long>(-signs[k] * system.forms[k].coeffs[c]);
    slice.add_row(row, Rational(-1));
  }
  Rational bound = 1;
  for (const Rational& c : *center) bound = std::max(bound, Rational(abs(c)));
  bound = 4 * (Rational(Integer(bound.get_num() / bound.get_den())) + 1);
  std::mt19937_64 rng(seed);
  auto jitter = [&] {
    Rational j(static_cast<long>(1000 + rng() % 1000), 1009);
    j.canonicalize();
    return j;
  };
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<Rational> row(dim);
    row[c] = 1;
    slice.add_row(row, bound * jitter());
    row[c] = -1;
    slice.add_row(row, bound * jitter());
  }

  // Every point of the slice satisfies sign * form >= 1, so convex
  // combinations of the center and slice vertices stay strictly inside the
  // chamber. Samples on a triple crossing are rejected.
  std::vector<Placement> out;
  auto accept = [&](const std::vector<Rational>& point) {
    Placement placement = placement_from_coordinates(point);
    if (signature_of(placement, moves) != sig) return;
    if (!is_generic(build_lines(placement, moves), placement)) return;
    out.push_back(std::move(placement));
  };
  accept(*center);
  auto random_vertex = [&]() -> std::optional<std::vector<Rational>> {
    std::vector<Rational> objective(dim);
    bool nonzero = false;
    for (auto& v : objective) {
      v = static_cast<long>(rng() % 11) - 5;
      nonzero = nonzero || sgn(v) != 0;
    }
    if (!nonzero) return std::nullopt;
    LpSolution vertex = maximize(slice, objective);
    if (vertex.status != LpStatus::optimal) return std::nullopt;
    return std::move(vertex.x);
  };
  for (std::size_t attempt = 0; out.size() < count && attempt < 16 * count + 16; ++attempt) {
    auto a = random_vertex();
    auto b = random_vertex();
    if (!a || !b) continue;
    Rational wa(static_cast<long>(1 + rng() % 997)), wb(static_cast<long>(1 + rng() % 991)),
        wc(static_cast<long>(1 + rng() % 983));
    const Rational total = wa + wb + wc;
    std::vector<Rational> point(dim);
    for (std::size_t c = 0; c < dim; ++c) point[c] = (wa * (*a)[c] + wb * (*b)[c] + wc * (*center)[c]) / total;
    accept(point);
  }
  return out;
}

ProblemSearch find_problem_pair(const Signature& type_sig, const MoveSet& moves, std::size_t samples_per_cell,
                                std::uint64_t seed) {
  if (type_sig.r() != moves.size()) throw InvalidArgument("signature and moveset disagree on r");
  const std::size_t q = type_sig.q();

  // Every chamber of the type, each sampled and mapped back to the order of type_sig.
  std::vector<Placement> samples;
  std::set<Signature> visited;
  std::uint64_t chamber_seed = seed;
  for (const Permutation& perm : all_permutations(q)) {
    Signature recorded = relabel_signature(type_sig, perm);
    if (!visited.insert(recorded).second) continue;
    for (Placement& relabeled : sample_chamber(recorded, moves, samples_per_cell, chamber_seed++)) {
      Placement original(q);
      for (std::size_t a = 0; a < q; ++a) original[perm[a] - 1] = relabeled[a];
      samples.push_back(std::move(original));
    }
  }

  ProblemSearch result;
  result.samples = samples.size();
  std::vector<ExtensionProfile> profiles;
  std::vector<std::size_t> owner;  // sample index of each distinct profile
  for (std::size_t s = 0; s < samples.size(); ++s) {
    ExtensionProfile profile = extension_profile(samples[s], moves);
    bool seen = std::any_of(profiles.begin(), profiles.end(),
                            [&](const ExtensionProfile& p) { return p.extensions == profile.extensions; });
    if (!seen) {
      profiles.push_back(std::move(profile));
      owner.push_back(s);
    }
  }
  result.distinct_profiles = profiles.size();

  // Closest pair of distinct profiles, preferring ones where each side has an
  // extension the other lacks; ties go to the earliest sampled.
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::size_t best_key = 0;
  for (std::size_t a = 0; a < profiles.size(); ++a)
    for (std::size_t b = a + 1; b < profiles.size(); ++b) {
      std::vector<Extension> only_a, only_b;
      std::set_difference(profiles[a].extensions.begin(), profiles[a].extensions.end(),
                          profiles[b].extensions.begin(), profiles[b].extensions.end(), std::back_inserter(only_a));
      std::set_difference(profiles[b].extensions.begin(), profiles[b].extensions.end(),
                          profiles[a].extensions.begin(), profiles[a].extensions.end(), std::back_inserter(only_b));
      const bool two_sided = !only_a.empty() && !only_b.empty();
      const std::size_t key = (two_sided ? 0 : 1u << 20) + only_a.size() + only_b.size();
      if (!best || key < best_key) {
        best = {a, b};
        best_key = key;
      }
    }

  if (best) {
    auto [a, b] = *best;
    ProblemPair pair{samples[owner[a]], samples[owner[b]], profiles[a], profiles[b], {}, {}};
    std::set_difference(pair.first_profile.extensions.begin(), pair.first_profile.extensions.end(),
                        pair.second_profile.extensions.begin(), pair.second_profile.extensions.end(),
                        std::back_inserter(pair.only_first));
    std::set_difference(pair.second_profile.extensions.begin(), pair.second_profile.extensions.end(),
                        pair.first_profile.extensions.begin(), pair.first_profile.extensions.end(),
                        std::back_inserter(pair.only_second));
    result.pair = std::move(pair);
  }
  return result;
}

Placement random_generic_placement(std::size_t q, const MoveSet& moves, std::mt19937_64& rng,
                                   const RandomPlacementOptions& options) {
  if (q == 0) throw InvalidArgument("placement needs q >= 1");
  for (;;) {
    Placement placement;
    while (placement.size() < q) {
      Point p = random_point(rng, options);
      if (!attacks_any(placement, p, moves)) placement.push_back(std::move(p));
    }
    if (is_generic(build_lines(placement, moves), placement)) return placement;
  }
}

Placement random_concurrent_placement(std::size_t q, const MoveSet& moves, std::mt19937_64& rng,
                                      const RandomPlacementOptions& options) {
  const std::size_t r = moves.size();
  if (q < 3 || r < 3) throw InvalidArgument("a three-line concurrence needs q >= 3 and r >= 3");
  for (;;) {
    Placement placement;
    while (placement.size() < q - 1) {
      Point p = random_point(rng, options);
      if (!attacks_any(placement, p, moves)) placement.push_back(std::move(p));
    }
    const std::size_t a = rng() % (q - 1);
    std::size_t b = rng() % (q - 2);
    if (b >= a) ++b;
    const std::size_t ma = rng() % r;
    std::size_t mb = rng() % (r - 1);
    if (mb >= ma) ++mb;
    std::size_t mc = rng() % (r - 2);
    for (std::size_t skip : {std::min(ma, mb), std::max(ma, mb)})
      if (mc >= skip) ++mc;

    const Line la{moves.direction(ma), placement[a], a + 1, ma};
    const Line lb{moves.direction(mb), placement[b], b + 1, mb};
    const Point crossing = *intersect(la, lb);
    if (std::find(placement.begin(), placement.end(), crossing) != placement.end()) continue;

    Rational t = random_coordinate(rng, options);
    if (sgn(t) == 0) continue;
    const Direction& dc = moves.direction(mc);
    Point last{crossing.x + t * dc.dx(), crossing.y + t * dc.dy()};
    if (attacks_any(placement, last, moves)) continue;
    placement.push_back(std::move(last));
    return placement;
  }
}

SpaceAudit lemma2_audit(std::size_t q, const MoveSet& moves, std::size_t trials, std::uint64_t seed,
                        std::size_t concurrent_trials) {
  SpaceAudit audit;
  audit.q = q;
  audit.r = moves.size();
  audit.expected = spaces_closed(static_cast<unsigned>(q), static_cast<unsigned>(moves.size())).get_ui();
  audit.trials = trials;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Placement p = random_generic_placement(q, moves, rng);
    std::size_t cells = count_cells(build_lines(p, moves));
    audit.generic_counts.push_back(cells);
    if (cells == audit.expected) ++audit.matches;
  }
  audit.concurrence_possible = q >= 3 && moves.size() >= 3;
  if (audit.concurrence_possible) {
    for (std::size_t t = 0; t < concurrent_trials; ++t) {
      Placement p = random_concurrent_placement(q, moves, rng);
      std::size_t cells = count_cells(build_lines(p, moves));
      audit.concurrent_counts.push_back(cells);
      if (cells >= audit.expected) audit.all_concurrent_smaller = false;
    }
  }
  return audit;
}

RecordingAudit lemma1_audit(std::size_t q, const MoveSet& moves, std::size_t trials, std::uint64_t seed) {
  RecordingAudit audit;
  audit.q = q;
  audit.r = moves.size();
  audit.trials = trials;
  std::mt19937_64 rng(seed);
  const auto perms = all_permutations(q);
  for (std::size_t t = 0; t < trials; ++t) {
    Signature sig = signature_of(random_generic_placement(q, moves, rng), moves);
    std::set<Signature> recordings;
    for (const Permutation& perm : perms) recordings.insert(relabel_signature(sig, perm));
    if (recordings.size() != perms.size()) {
      ++audit.collisions;
      audit.colliding.push_back(sig);
    }
  }
  return audit;
}

ExtensionCensus extension_census(std::size_t q, const MoveSet& moves, std::size_t samples_per_chamber,
                                 std::uint64_t seed, std::size_t workers) {
  if (q == 0) throw InvalidArgument("extension census needs at least one rider");
  if (samples_per_chamber == 0) throw InvalidArgument("extension census needs at least one sample per chamber");
  std::vector<Signature> recordings;
  if (q == 1) {
    recordings.emplace_back(std::vector<int>{}, moves.size());
  } else {
    const ConstraintSystem system = build_constraints(q, moves);
    for (const Chamber& c : collect_chambers(system, {.workers = workers}))
      recordings.push_back(signature_of_signs(system, c.signs));
  }

  struct Tally {
    std::size_t samples = 0;
    std::size_t extensions = 0;
  };
  auto tallies = parallel_map(recordings.size(), workers, [&](std::size_t k) {
    std::set<Extension> seen;
    auto samples = sample_chamber(recordings[k], moves, samples_per_chamber, seed + k);
    for (const Placement& p : samples) {
      auto profile = extension_profile(p, moves);
      seen.insert(profile.extensions.begin(), profile.extensions.end());
    }
    return Tally{samples.size(), seen.size()};
  });

  ExtensionCensus out{q, moves.size(), recordings.size(), 0, 0};
  for (const Tally& t : tallies) {
    out.samples += t.samples;
    out.extended_chambers += t.extensions;
  }
  return out;
}

}  // namespace riders
