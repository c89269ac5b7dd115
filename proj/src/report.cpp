#include "riders/report.hpp"

#include <sstream>

#include "riders/errors.hpp"

namespace riders {

namespace {

Json reference_json(const std::optional<ExternalReference>& ref) {
  if (!ref) return nullptr;
  return Json{{"value", to_string(ref->value)}, {"queen_only", ref->queen_only}, {"source", ref->source}};
}

Json extension_list(const std::set<Extension>& exts) {
  Json out = Json::array();
  for (const Extension& e : exts) out.push_back(e);
  return out;
}

}  // namespace

Json to_json(const BoundsReport& rep) {
  Json out{
      {"q", rep.q},
      {"r", rep.r},
      {"spaces", to_string(rep.spaces)},
      {"permutations_lower", to_string(rep.permutations_lower)},
      {"problem_spaces", to_string(rep.problem_spaces)},
      {"t_lower", to_string(rep.t_lower)},
      {"t_lower_decimal", to_decimal_string(rep.t_lower)},
      {"t_upper", to_string(rep.t_upper)},
      {"t_upper_decimal", to_decimal_string(rep.t_upper)},
      {"upper_applicable", rep.upper_applicable},
  };
  if (rep.upper_applicable) out["note"] = kUpperBoundNote;
  out["external_reference"] = reference_json(rep.reference);
  return out;
}

Json table_json(const std::vector<BoundsReport>& table, unsigned q_max, unsigned r_max) {
  Json rows = Json::array();
  for (const BoundsReport& rep : table) rows.push_back(to_json(rep));
  return Json{{"q_max", q_max}, {"r_max", r_max}, {"upper_bound_note", kUpperBoundNote}, {"entries", rows}};
}

std::string table_csv(const std::vector<BoundsReport>& table) {
  std::ostringstream out;
  out << "q,r,t_lower,t_upper,upper_applicable,external_reference\n";
  for (const BoundsReport& rep : table) {
    out << rep.q << ',' << rep.r << ',' << to_decimal_string(rep.t_lower) << ',' << to_decimal_string(rep.t_upper)
        << ',' << (rep.upper_applicable ? "yes" : "no") << ',';
    if (rep.reference) out << to_string(rep.reference->value) << (rep.reference->queen_only ? " (queen)" : "");
    out << '\n';
  }
  return out.str();
}

Json census_json(const TypeCensus& c, const SandwichReport& s) {
  Json violations = Json::array();
  for (const Signature& sig : c.freeness_violations) violations.push_back(sig.to_string());
  Json out{
      {"q", c.q},
      {"r", c.r},
      {"moveset", c.moveset},
      {"chamber_count", c.chamber_count},
      {"type_count", c.type_count},
      {"lp_calls", c.lp_calls},
      {"t_lower", to_string(s.t_lower)},
      {"t_lower_decimal", to_decimal_string(s.t_lower)},
      {"t_upper", to_string(s.t_upper)},
      {"t_upper_decimal", to_decimal_string(s.t_upper)},
      {"sandwich",
       {{"holds", s.holds},
        {"lower_slack", to_string(s.lower_slack)},
        {"upper_slack", to_string(s.upper_slack)},
        {"chamber_count_divisible", s.divisible}}},
      {"freeness_violations", violations},
  };
  auto ref = external_reference(static_cast<unsigned>(c.q), static_cast<unsigned>(c.r));
  Json ref_json = reference_json(ref);
  if (ref) ref_json["agrees"] = to_string(ref->value) == std::to_string(c.type_count);
  out["external_reference"] = ref_json;
  return out;
}

Json to_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json placement_json(const Placement& placement) {
  Json out = Json::array();
  for (const Point& p : placement) out.push_back(to_json(p));
  return out;
}

Placement parse_placement_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& e) {
    throw InvalidArgument(std::string("placement file is not JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw InvalidArgument("placement must be a non-empty list of [x, y] pairs");
  Placement out;
  for (const Json& item : doc) {
    if (!item.is_array() || item.size() != 2) throw InvalidArgument("placement entries must be [x, y] pairs");
    Point p;
    Rational* coords[2] = {&p.x, &p.y};
    for (std::size_t c = 0; c < 2; ++c) {
      if (item[c].is_string())
        *coords[c] = parse_rational(item[c].get<std::string>());
      else if (item[c].is_number_integer())
        *coords[c] = Rational(item[c].get<long>());
      else
        throw InvalidArgument("placement coordinates must be fraction strings or integers");
    }
    out.push_back(std::move(p));
  }
  return out;
}

Json profile_json(const ExtensionProfile& profile) {
  Json witnesses = Json::array();
  for (const auto& [ext, point] : profile.witnesses) witnesses.push_back({{"extension", ext}, {"point", to_json(point)}});
  return Json{{"base_signature", profile.base_signature.to_string()},
              {"extensions", extension_list(profile.extensions)},
              {"witnesses", witnesses}};
}

Json to_json(const SpaceAudit& a) {
  return Json{{"lemma", 2},
              {"q", a.q},
              {"r", a.r},
              {"expected_spaces", a.expected},
              {"trials", a.trials},
              {"matches", a.matches},
              {"generic_counts", a.generic_counts},
              {"concurrence_possible", a.concurrence_possible},
              {"concurrent_counts", a.concurrent_counts},
              {"all_concurrent_smaller", a.all_concurrent_smaller}};
}

Json to_json(const RecordingAudit& a) {
  Json colliding = Json::array();
  for (const Signature& s : a.colliding) colliding.push_back(s.to_string());
  return Json{{"lemma", 1},     {"q", a.q}, {"r", a.r}, {"trials", a.trials}, {"collisions", a.collisions},
              {"colliding", colliding}};
}

std::string signature_lines(const std::vector<Signature>& signatures) {
  std::string out;
  for (const Signature& s : signatures) out += s.to_string() + "\n";
  return out;
}

}  // namespace riders
