// rider_types: bounds tables, exact type censuses, arrangement audits and
// diagrams for non-attacking riders.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "riders/arrangement.hpp"
#include "riders/bounds.hpp"
#include "riders/errors.hpp"
#include "riders/oracle.hpp"
#include "riders/parallel.hpp"
#include "riders/report.hpp"
#include "riders/svg.hpp"

using namespace riders;

namespace {

enum Exit : int { kOk = 0, kUsage = 2, kBudget = 3, kNotFound = 4, kViolation = 5 };

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_ = Clock::now();
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const Json& doc) { write_text(path, doc.dump(2) + "\n"); }

Json runtime(const Stopwatch& clock, std::size_t workers) {
  return Json{{"seconds", clock.seconds()}, {"workers", workers}};
}

/// Moveset from --moveset, else the default for --r; checks that both agree.
MoveSet resolve_moveset(const std::string& text, std::optional<std::size_t> r) {
  if (text.empty()) {
    if (!r) throw InvalidArgument("give --r or --moveset");
    if (*r == 0) throw InvalidArgument("--r must be at least 1");
    return default_moveset(*r);
  }
  MoveSet moves = parse_moveset(text);
  if (r && *r != moves.size())
    throw InvalidArgument("--r " + std::to_string(*r) + " disagrees with a moveset of " +
                          std::to_string(moves.size()) + " directions");
  return moves;
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
  std::optional<unsigned> q, r;
  std::string table;
  std::string format = "json";
  std::string out;
};

int run_bounds(const BoundsArgs& a) {
  Json invocation{{"command", "bounds"}};
  if (!a.table.empty()) {
    std::smatch m;
    static const std::regex shape(R"((\d+)x(\d+))");
    if (!std::regex_match(a.table, m, shape)) throw InvalidArgument("--table expects QxR, e.g. 6x6");
    const unsigned q_max = static_cast<unsigned>(std::stoul(m[1]));
    const unsigned r_max = static_cast<unsigned>(std::stoul(m[2]));
    const auto table = generate_table(q_max, r_max);
    if (a.format == "csv") {
      write_text(a.out, table_csv(table));
      return kOk;
    }
    invocation["table"] = a.table;
    Json doc{{"invocation", invocation}};
    doc.update(table_json(table, q_max, r_max));
    emit(a.out, doc);
    return kOk;
  }
  if (!a.q || !a.r) throw InvalidArgument("give --q and --r, or --table QxR");
  const BoundsReport rep = bounds_report(*a.q, *a.r);
  if (a.format == "csv") {
    write_text(a.out, table_csv({rep}));
    return kOk;
  }
  invocation["q"] = *a.q;
  invocation["r"] = *a.r;
  Json doc{{"invocation", invocation}};
  doc.update(to_json(rep));
  emit(a.out, doc);
  return kOk;
}

// ---------------------------------------------------------------------------

struct CensusArgs {
  std::size_t q = 0;
  std::optional<std::size_t> r;
  std::string moveset;
  std::size_t budget = 0;
  std::string emit_signatures;
  bool stretch = false;
  bool no_shortcut = false;
  std::size_t workers = 1;
  std::string out;
};

int run_census(const CensusArgs& a) {
  const MoveSet moves = resolve_moveset(a.moveset, a.r);
  Json invocation{{"command", "census"},   {"q", a.q},          {"r", moves.size()},
                  {"moveset", moves.to_string()}, {"budget", a.budget}, {"stretch", a.stretch},
                  {"witness_shortcut", !a.no_shortcut}};
  CensusOptions options;
  options.enumeration.lp_budget = a.budget;
  options.enumeration.workers = a.workers;
  options.enumeration.witness_shortcut = !a.no_shortcut;
  options.stretch = a.stretch;
  options.keep_signatures = !a.emit_signatures.empty();

  Stopwatch clock;
  TypeCensus result;
  try {
    result = census(a.q, moves, options);
  } catch (const BudgetExhausted& e) {
    Json doc{{"invocation", invocation},
             {"valid", false},
             {"error", e.what()},
             {"partial_chamber_count", e.partial_chambers()},
             {"lp_calls", e.lp_calls()},
             {"runtime", runtime(clock, a.workers)}};
    emit(a.out, doc);
    return kBudget;
  }

  const SandwichReport sandwich = sandwich_check(result);
  if (!a.emit_signatures.empty()) write_text(a.emit_signatures, signature_lines(result.canonical_signatures));
  Json doc{{"invocation", invocation}, {"valid", true}};
  doc.update(census_json(result, sandwich));
  doc["runtime"] = runtime(clock, a.workers);
  emit(a.out, doc);

  if (!sandwich.holds || !sandwich.divisible || !sandwich.free_action) {
    std::cerr << "invariant violation: the type count breaks the bounds or the free action\n";
    return kViolation;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct AuditArgs {
  int lemma = 2;
  std::size_t q = 0;
  std::optional<std::size_t> r;
  std::string moveset;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t concurrent_trials = 10;
  std::string out;
};

int run_audit(const AuditArgs& a) {
  const MoveSet moves = resolve_moveset(a.moveset, a.r);
  Json invocation{{"command", "audit"}, {"lemma", a.lemma},   {"q", a.q},         {"r", moves.size()},
                  {"moveset", moves.to_string()}, {"trials", a.trials}, {"seed", a.seed}};
  Stopwatch clock;
  Json doc{{"invocation", invocation}};
  bool ok = true;
  if (a.lemma == 1) {
    const RecordingAudit audit = lemma1_audit(a.q, moves, a.trials, a.seed);
    doc.update(to_json(audit));
    ok = audit.collisions == 0;
  } else {
    invocation["concurrent_trials"] = a.concurrent_trials;
    doc["invocation"] = invocation;
    const SpaceAudit audit = lemma2_audit(a.q, moves, a.trials, a.seed, a.concurrent_trials);
    doc.update(to_json(audit));
    ok = audit.matches == audit.trials && audit.all_concurrent_smaller;
  }
  doc["runtime"] = runtime(clock, 1);
  emit(a.out, doc);
  if (!ok) {
    std::cerr << "invariant violation: audit found placements disagreeing with the expected counts\n";
    return kViolation;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct DemoArgs {
  std::string type;
  std::optional<std::size_t> r;
  std::string moveset;
  std::size_t samples = 8;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  std::string prefix = "problem";
  std::string out;
};

Json extension_array(const std::vector<Extension>& exts) {
  Json out = Json::array();
  for (const Extension& e : exts) out.push_back(e);
  return out;
}

std::string render_pair_member(const Placement& placement, const MoveSet& moves, const ExtensionProfile& profile,
                               const std::vector<Extension>& shaded, const std::string& title) {
  RenderSpec spec{.placement = placement, .moves = moves};
  spec.title = title;
  for (const Extension& e : shaded) spec.shaded_cells.push_back(profile.witnesses.at(e));
  return render_svg(spec);
}

int run_problem_demo(const DemoArgs& a) {
  const MoveSet moves = resolve_moveset(a.moveset, a.r);
  if (moves.size() < 3) throw InvalidArgument("problem spaces need at least three moves (r >= 3)");
  const Signature type_sig = parse_signature(a.type, moves.size());
  Json invocation{{"command", "problem-demo"}, {"type", type_sig.to_string()}, {"r", moves.size()},
                  {"moveset", moves.to_string()}, {"samples", a.samples},      {"seed", a.seed}};

  Stopwatch clock;
  const ProblemSearch search = find_problem_pair(type_sig, moves, a.samples, a.seed);
  Json doc{{"invocation", invocation},
           {"samples", search.samples},
           {"distinct_profiles", search.distinct_profiles},
           {"found", search.pair.has_value()}};
  if (!search.pair) {
    doc["runtime"] = runtime(clock, 1);
    emit(a.out, doc);
    std::cerr << "no two placements of type " << type_sig.to_string() << " with different extension options\n";
    return kNotFound;
  }

  const ProblemPair& pair = *search.pair;
  const auto canonical = canonicalize_signature(type_sig);
  if (canonicalize_signature(signature_of(pair.first, moves)) != canonical ||
      canonicalize_signature(signature_of(pair.second, moves)) != canonical) {
    std::cerr << "invariant violation: sampled placements left the requested type\n";
    return kViolation;
  }

  std::filesystem::create_directories(a.out_dir);
  const auto first_svg = std::filesystem::path(a.out_dir) / (a.prefix + "_a.svg");
  const auto second_svg = std::filesystem::path(a.out_dir) / (a.prefix + "_b.svg");
  write_text(first_svg.string(), render_pair_member(pair.first, moves, pair.first_profile, pair.only_first,
                                                    type_sig.to_string() + " placement A"));
  write_text(second_svg.string(), render_pair_member(pair.second, moves, pair.second_profile, pair.only_second,
                                                     type_sig.to_string() + " placement B"));

  doc["canonical_signature"] = canonical.to_string();
  doc["first"] = {{"placement", placement_json(pair.first)},
                  {"profile", profile_json(pair.first_profile)},
                  {"svg", first_svg.string()}};
  doc["second"] = {{"placement", placement_json(pair.second)},
                   {"profile", profile_json(pair.second_profile)},
                   {"svg", second_svg.string()}};
  doc["only_first"] = extension_array(pair.only_first);
  doc["only_second"] = extension_array(pair.only_second);
  doc["runtime"] = runtime(clock, 1);
  emit(a.out, doc);
  return kOk;
}

// ---------------------------------------------------------------------------

struct RenderArgs {
  std::string placement;
  std::string moveset = "queen";
  std::string out;
  double canvas = 640.0;
  std::string margin = "1/4";
  bool roman = false;
  bool no_region_labels = false;
  bool no_piece_labels = false;
  std::vector<std::string> shade;
  std::string title;
};

Point parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidArgument("expected x,y but got '" + text + "'");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

int run_render(const RenderArgs& a) {
  RenderSpec spec{.placement = parse_placement_json(read_text(a.placement)), .moves = parse_moveset(a.moveset)};
  spec.canvas = a.canvas;
  spec.margin = parse_rational(a.margin);
  spec.roman_labels = a.roman;
  spec.region_labels = !a.no_region_labels;
  spec.piece_labels = !a.no_piece_labels;
  spec.title = a.title;
  for (const std::string& s : a.shade) spec.shaded_cells.push_back(parse_point(s));
  write_text(a.out, render_svg(spec));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial types of non-attacking riders"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "rider_types 1.0");

  const std::size_t default_workers = default_worker_count();

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Space counts and lower/upper bounds on the type count");
  bounds_cmd->add_option("--q", bounds.q, "Number of riders")->check(CLI::Range(1, 1000000));
  bounds_cmd->add_option("--r", bounds.r, "Number of moves")->check(CLI::Range(1, 1000000));
  bounds_cmd->add_option("--table", bounds.table, "Grid q=1..Q, r=1..R, written QxR");
  bounds_cmd->add_option("--format", bounds.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  bounds_cmd->add_option("--out", bounds.out, "Output file (default stdout)");

  CensusArgs census_args;
  census_args.workers = default_workers;
  auto* census_cmd = app.add_subcommand("census", "Exact type count by chamber enumeration");
  census_cmd->add_option("--q", census_args.q, "Number of riders")->required()->check(CLI::Range(1, 1000000));
  census_cmd->add_option("--r", census_args.r, "Number of moves (default moveset)");
  census_cmd->add_option("--moveset", census_args.moveset, "Directions 'dx,dy;dx,dy;...', or queen / rook");
  census_cmd->add_option("--budget", census_args.budget, "Maximum LP solves (0 = unlimited)");
  census_cmd->add_option("--emit-signatures", census_args.emit_signatures, "Write canonical signatures here");
  census_cmd->add_flag("--stretch", census_args.stretch, "Allow the slow sizes (q=5, r=3 and q=4, r<=6)");
  census_cmd->add_flag("--no-shortcut", census_args.no_shortcut, "Solve an LP for every branch");
  census_cmd->add_option("--workers", census_args.workers, "Worker threads (default RIDER_TYPES_WORKERS or 1)")
      ->check(CLI::Range(1, 1000000));
  census_cmd->add_option("--out", census_args.out, "Output file (default stdout)");

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand("audit", "Check space counts or recording distinctness on random placements");
  audit_cmd->add_option("--lemma", audit.lemma, "1: distinct recordings, 2: space counts")
      ->check(CLI::IsMember({1, 2}));
  audit_cmd->add_option("--q", audit.q, "Number of riders")->required()->check(CLI::Range(1, 1000000));
  audit_cmd->add_option("--r", audit.r, "Number of moves (default moveset)");
  audit_cmd->add_option("--moveset", audit.moveset, "Directions 'dx,dy;dx,dy;...', or queen / rook");
  audit_cmd->add_option("--trials", audit.trials, "Random generic placements");
  audit_cmd->add_option("--seed", audit.seed, "Random seed");
  audit_cmd->add_option("--concurrent-trials", audit.concurrent_trials, "Placements with a forced concurrence");
  audit_cmd->add_option("--out", audit.out, "Output file (default stdout)");

  DemoArgs demo;
  auto* demo_cmd = app.add_subcommand("problem-demo", "Two placements of one type with different extension options");
  demo_cmd->add_option("--type", demo.type, "Signature such as \"(1,6,5)\"")->required();
  demo_cmd->add_option("--r", demo.r, "Number of moves (default moveset)");
  demo_cmd->add_option("--moveset", demo.moveset, "Directions 'dx,dy;dx,dy;...', or queen / rook");
  demo_cmd->add_option("--samples", demo.samples, "Samples per chamber")->check(CLI::Range(1, 1000000));
  demo_cmd->add_option("--seed", demo.seed, "Random seed");
  demo_cmd->add_option("--out-dir", demo.out_dir, "Directory for the two SVG files");
  demo_cmd->add_option("--prefix", demo.prefix, "SVG file name prefix");
  demo_cmd->add_option("--out", demo.out, "JSON output file (default stdout)");

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "Draw a placement as SVG");
  render_cmd->add_option("--placement", render.placement, "JSON file [[\"x\",\"y\"], ...]")->required();
  render_cmd->add_option("--moveset", render.moveset, "Directions 'dx,dy;dx,dy;...', or queen / rook");
  render_cmd->add_option("--out", render.out, "SVG file (default stdout)");
  render_cmd->add_option("--canvas", render.canvas, "Pixels along the longer side")->check(CLI::PositiveNumber);
  render_cmd->add_option("--margin", render.margin, "Viewport growth as a fraction of its span");
  render_cmd->add_flag("--roman", render.roman, "Roman numeral region labels");
  render_cmd->add_flag("--no-region-labels", render.no_region_labels, "Omit region labels");
  render_cmd->add_flag("--no-piece-labels", render.no_piece_labels, "Omit P1..Pq labels");
  render_cmd->add_option("--shade", render.shade, "Shade the cell containing x,y (repeatable)");
  render_cmd->add_option("--title", render.title, "SVG title");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*bounds_cmd) return run_bounds(bounds);
    if (*census_cmd) return run_census(census_args);
    if (*audit_cmd) return run_audit(audit);
    if (*demo_cmd) return run_problem_demo(demo);
    if (*render_cmd) return run_render(render);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const AttackingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "not found: " << e.what() << '\n';
    return kNotFound;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
