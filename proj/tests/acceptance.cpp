// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "riders/arrangement.hpp"
#include "riders/bounds.hpp"
#include "riders/oracle.hpp"
#include "riders/report.hpp"
#include "riders/svg.hpp"

using namespace riders;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      out_.pass = false;
      if (!failures_.empty()) failures_ += "; ";
      failures_ += what;
    }
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : ", ") + text; }
  Outcome result() const {
    return {out_.pass, out_.pass ? notes_ : "failed: " + failures_ + (notes_.empty() ? "" : " [" + notes_ + "]")};
  }

 private:
  Outcome out_;
  std::string failures_;
  std::string notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Every census in the suite passes through here so that criterion 4 sees all of them.
struct CensusLog {
  struct Entry {
    std::string label;
    TypeCensus census;
    SandwichReport sandwich;
  };
  std::deque<Entry> entries;

  const TypeCensus& run(std::size_t q, const MoveSet& moves, std::size_t workers = 1) {
    CensusOptions options;
    options.enumeration.workers = workers;
    TypeCensus c = census(q, moves, options);
    SandwichReport s = sandwich_check(c);
    std::ostringstream label;
    label << "(" << q << "," << moves.size() << ")";
    entries.push_back({label.str(), std::move(c), s});
    return entries.back().census;
  }
};

Outcome table_reproduction() {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto table = generate_table(6, 6);
  auto at = [&](unsigned q, unsigned r) -> const BoundsReport& { return table[(q - 1) * 6 + (r - 1)]; };
  auto check = [&](unsigned q, unsigned r, const char* lo, const char* hi) {
    const bool ok = at(q, r).t_lower == parse_rational(lo) && at(q, r).t_upper == parse_rational(hi);
    c.expect(ok, "(" + std::to_string(q) + "," + std::to_string(r) + ") = [" + to_decimal_string(at(q, r).t_lower) +
                     ", " + to_decimal_string(at(q, r).t_upper) + "]");
  };
  const char* row3[] = {"1", "6", "17", "36", "65", "106"};
  for (unsigned r = 1; r <= 6; ++r) {
    check(1, r, "1", "1");
    check(2, r, std::to_string(r).c_str(), std::to_string(r).c_str());
    check(3, r, row3[r - 1], row3[r - 1]);
  }
  const char* factorials[] = {"24", "120", "720"};
  for (unsigned q = 4; q <= 6; ++q) {
    check(q, 1, "1", "1");
    check(q, 2, factorials[q - 4], factorials[q - 4]);
  }
  check(4, 3, "144.5", "289");
  check(4, 4, "522", "2088");
  check(4, 5, "1430", "10010");
  check(4, 6, "3286", "36146");
  check(5, 3, "1647.3", "3641.4");
  check(5, 4, "10544.4", "52200");
  check(5, 5, "44902", "434434");
  check(5, 6, "147870", "2494074");
  check(6, 3, "23611.3", "63117.6");
  check(6, 4, "274154.4", "1983600");
  check(6, 5, "1840982", "30844814");
  check(6, 6, "8773620", "297626164");
  const double s = seconds_since(t0);
  c.expect(s < 1.0, "took " + std::to_string(s) + " s");
  c.note("36 entries exact");
  return c.result();
}

Outcome small_type_counts(CensusLog& log) {
  Checker c;
  const std::map<std::size_t, std::size_t> three{{2, 6}, {3, 17}, {4, 36}, {5, 65}, {6, 106}};
  std::string counts;
  for (std::size_t r = 2; r <= 6; ++r) {
    const MoveSet moves = r == 4 ? queen_moveset() : default_moveset(r);
    for (std::size_t q : {2u, 3u}) {
      const auto t0 = std::chrono::steady_clock::now();
      const TypeCensus& t = log.run(q, moves);
      const double s = seconds_since(t0);
      const std::size_t want = q == 2 ? r : three.at(r);
      const std::string tag = "t(" + std::to_string(q) + "," + std::to_string(r) + ")";
      c.expect(t.type_count == want, tag + " = " + std::to_string(t.type_count) + ", expected " + std::to_string(want));
      c.expect(s < 10.0, tag + " took " + std::to_string(s) + " s");
      if (q == 3) counts += (counts.empty() ? "" : ",") + std::to_string(t.type_count);
    }
  }
  c.note("t(3,2..6) = " + counts);
  return c.result();
}

Outcome queen_four(CensusLog& log) {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  const TypeCensus& t = log.run(4, queen_moveset());
  const double s = seconds_since(t0);
  const SandwichReport sw = sandwich_check(t);
  c.expect(t.type_count == 574, "type_count " + std::to_string(t.type_count));
  c.expect(t.chamber_count == 13776, "chamber_count " + std::to_string(t.chamber_count));
  c.expect(sw.holds && sw.t_lower == 522 && sw.t_upper == 2088, "sandwich 522 <= t <= 2088");
  c.expect(s < 600.0, "took " + std::to_string(s) + " s");
  char buf[96];
  std::snprintf(buf, sizeof buf, "574 types, 13776 chambers in %.1f s", s);
  c.note(buf);
  return c.result();
}

Outcome sandwich_everywhere(const CensusLog& log) {
  Checker c;
  for (const auto& e : log.entries) {
    c.expect(e.sandwich.holds, e.label + " outside [t_lower, t_upper]");
    c.expect(e.sandwich.divisible, e.label + " chamber_count != q! * type_count");
    c.expect(e.census.freeness_violations.empty(), e.label + " has freeness violations");
  }
  c.note(std::to_string(log.entries.size()) + " census runs");
  return c.result();
}

Outcome lemma2() {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t concurrent_cases = 0;
  for (std::size_t q = 1; q <= 3; ++q)
    for (std::size_t r = 2; r <= 4; ++r) {
      const SpaceAudit a = lemma2_audit(q, default_moveset(r), 100, 7, 10);
      const std::string tag = "(" + std::to_string(q) + "," + std::to_string(r) + ")";
      c.expect(a.matches == 100, tag + " " + std::to_string(a.matches) + "/100 generic counts match");
      if (q == 3 && r == 3) c.expect(a.expected == 34, "(3,3) expected 34 spaces");
      if (a.concurrence_possible) {
        ++concurrent_cases;
        c.expect(a.concurrent_counts.size() == 10 && a.all_concurrent_smaller, tag + " concurrent counts not smaller");
      }
    }
  const double s = seconds_since(t0);
  c.expect(s < 30.0, "took " + std::to_string(s) + " s");
  c.note("900/900 generic; concurrences forced at " + std::to_string(concurrent_cases) +
         " sizes (none exist for q <= 2 or r = 2)");
  return c.result();
}

Outcome figure3() {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  const MoveSet moves = default_moveset(3);
  const Signature type = parse_signature("(1,6,5)", 3);
  const ProblemSearch search = find_problem_pair(type, moves);
  c.expect(search.pair.has_value(), "no pair found");
  if (search.pair) {
    const ProblemPair& p = *search.pair;
    const Signature canon = canonicalize_signature(type);
    c.expect(canonicalize_signature(signature_of(p.first, moves)) == canon &&
                 canonicalize_signature(signature_of(p.second, moves)) == canon,
             "placements differ in type");
    c.expect(p.first_profile.extensions != p.second_profile.extensions, "profiles equal");
    const Extension a{1, 5, 3}, b{6, 4, 2};
    auto has = [](const ExtensionProfile& prof, const Extension& e) { return prof.extensions.count(e) == 1; };
    const bool split = (has(p.first_profile, a) && has(p.second_profile, b) && !has(p.second_profile, a)) ||
                       (has(p.second_profile, a) && has(p.first_profile, b) && !has(p.first_profile, a));
    c.expect(split, "(1,5,3) and (6,4,2) not split across the pair");
    const std::string svg_a = render_svg(RenderSpec{.placement = p.first, .moves = moves});
    const std::string svg_b = render_svg(RenderSpec{.placement = p.second, .moves = moves});
    c.expect(svg_a.rfind("<svg", 0) == 0 && svg_b.rfind("<svg", 0) == 0, "SVG output");
    c.note(std::to_string(search.distinct_profiles) + " distinct profiles from " + std::to_string(search.samples) +
           " samples");
  }
  const double s = seconds_since(t0);
  c.expect(s < 60.0, "took " + std::to_string(s) + " s");
  return c.result();
}

Outcome cross_oracle(CensusLog& log) {
  Checker c;
  auto chambers_of = [&](std::size_t q, const MoveSet& moves) {
    for (const auto& e : log.entries)
      if (e.census.q == q && e.census.moveset == moves.to_string()) return e.census.chamber_count;
    return log.run(q, moves).chamber_count;
  };
  struct Case {
    std::size_t q;
    MoveSet moves;
    std::size_t samples;
    bool exact;
  };
  const std::vector<Case> cases{{2, rook_moveset(), 4, true},
                                {2, queen_moveset(), 4, true},
                                {3, default_moveset(3), 4, false},
                                {3, queen_moveset(), 2, false}};
  for (const Case& k : cases) {
    const ExtensionCensus e = extension_census(k.q, k.moves, k.samples, 1);
    const std::size_t next = chambers_of(k.q + 1, k.moves);
    const std::string tag = "(" + std::to_string(k.q) + "," + std::to_string(k.moves.size()) + ")";
    c.expect(e.extended_chambers <= next, tag + " sampled " + std::to_string(e.extended_chambers) + " > " +
                                              std::to_string(next));
    if (k.exact) c.expect(e.extended_chambers == next, tag + " sampled " + std::to_string(e.extended_chambers) +
                                                           " != " + std::to_string(next));
    c.note(tag + " " + std::to_string(e.extended_chambers) + "/" + std::to_string(next));
  }
  return c.result();
}

Outcome parallel_determinism(CensusLog& log) {
  Checker c;
  for (auto [q, moves] : {std::pair<std::size_t, MoveSet>{3, queen_moveset()}, {4, default_moveset(3)}}) {
    const TypeCensus& one = log.run(q, moves, 1);
    const std::string a = census_json(one, sandwich_check(one)).dump();
    const TypeCensus& many = log.run(q, moves, 4);
    const std::string b = census_json(many, sandwich_check(many)).dump();
    c.expect(a == b, "(" + std::to_string(q) + "," + std::to_string(moves.size()) + ") JSON differs");
  }
  c.note("(3,4) and (4,3) identical with 1 and 4 workers");
  return c.result();
}

}  // namespace

int main() {
  CensusLog log;
  // Criterion 4 inspects every census the others ran, so it goes last.
  const std::vector<std::tuple<int, std::string, std::function<Outcome()>>> criteria{
      {1, "bound table reproduction", [] { return table_reproduction(); }},
      {2, "exact type counts, q <= 3", [&] { return small_type_counts(log); }},
      {3, "queen q = 4 ground truth", [&] { return queen_four(log); }},
      {5, "space-count audit", [] { return lemma2(); }},
      {6, "placements with different extension options", [] { return figure3(); }},
      {7, "cross-oracle consistency", [&] { return cross_oracle(log); }},
      {8, "determinism under parallelism", [&] { return parallel_determinism(log); }},
      {4, "sandwich and divisibility on every census", [&] { return sandwich_everywhere(log); }},
  };
  std::map<int, std::string> lines;
  int failures = 0;
  for (const auto& [id, name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    char head[160];
    std::snprintf(head, sizeof head, "[%s] criterion %d %s (%.2f s): ", o.pass ? "PASS" : "FAIL", id, name.c_str(),
                  seconds_since(t0));
    lines[id] = head + o.detail;
  }
  for (const auto& [id, line] : lines) std::printf("%s\n", line.c_str());
  return failures == 0 ? 0 : 1;
}
