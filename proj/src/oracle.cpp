#include "riders/oracle.hpp"

#include <algorithm>
#include <set>

#include "riders/bounds.hpp"
#include "riders/parallel.hpp"
#include "riders/simplex.hpp"

namespace riders {

namespace {

std::size_t var_x(std::size_t piece) { return 2 * (piece - 2); }
std::size_t var_y(std::size_t piece) { return 2 * (piece - 2) + 1; }

Rational evaluate(const LinearForm& form, std::span<const Rational> x) {
  Rational v = 0;
  for (std::size_t c = 0; c < form.coeffs.size(); ++c)
    if (form.coeffs[c] != 0) v += Rational(static_cast<long>(form.coeffs[c])) * x[c];
  return v;
}

std::vector<Rational> constraint_row(const LinearForm& form, int sign) {
  std::vector<Rational> row(form.coeffs.size());
  for (std::size_t c = 0; c < form.coeffs.size(); ++c) row[c] = static_cast<long>(-sign * form.coeffs[c]);
  return row;
}

// Depth-first walk over sign prefixes. The LP system always mirrors `signs`.
class ChamberSearch {
 public:
  ChamberSearch(const ConstraintSystem& sys, const EnumerationOptions& opt, LpBudget& budget)
      : sys_(sys), opt_(opt), budget_(budget), lp_(sys.dimension) {}

  void start_from(const SignPattern& prefix) {
    for (std::size_t k = 0; k < prefix.size(); ++k) push(k, prefix[k]);
  }

  // Calls leaf(signs, witness) for every feasible prefix of length stop_depth.
  template <class Leaf>
  void descend(const std::vector<Rational>& witness, std::size_t stop_depth, Leaf&& leaf) {
    const std::size_t k = signs_.size();
    if (k == stop_depth) {
      leaf(signs_, witness);
      return;
    }
    const LinearForm& form = sys_.forms[k];
    const int here = sign(evaluate(form, witness));
    for (int s : {+1, -1}) {
      signs_.push_back(static_cast<std::int8_t>(s));
      if (!pair_pattern_ok(k)) {
        signs_.pop_back();
        continue;
      }
      std::optional<std::vector<Rational>> child;
      if (opt_.witness_shortcut && here == s) {
        // Scale the parent's witness until the new form also reaches 1.
        Rational v = abs(evaluate(form, witness));
        std::vector<Rational> scaled = witness;
        if (v < 1) {
          Rational lambda = 1 / v;
          for (Rational& c : scaled) c *= lambda;
        }
        child = std::move(scaled);
        push_row(k, s);
      } else {
        push_row(k, s);
        budget_.charge();
        child = find_feasible_point(lp_);
      }
      if (child) descend(*child, stop_depth, leaf);
      lp_.pop_row();
      signs_.pop_back();
    }
  }

 private:
  void push(std::size_t k, std::int8_t s) {
    signs_.push_back(s);
    push_row(k, s);
  }

  void push_row(std::size_t k, int s) {
    auto row = constraint_row(sys_.forms[k], s);
    lp_.add_row(row, Rational(-1));
  }

  bool pair_pattern_ok(std::size_t k) const {
    const std::size_t r = sys_.moves.size();
    const std::size_t begin = (k / r) * r;
    return sys_.moves.is_pattern_prefix(std::span<const std::int8_t>(signs_.data() + begin, k + 1 - begin));
  }

  const ConstraintSystem& sys_;
  const EnumerationOptions& opt_;
  LpBudget& budget_;
  InequalitySystem lp_;
  SignPattern signs_;
};

std::size_t split_depth(const ConstraintSystem& system) {
  return std::min(system.forms.size(), 2 * system.moves.size());
}

}  // namespace

BudgetExhausted::BudgetExhausted(std::size_t partial_chambers, std::size_t lp_calls)
    : ResourceError("LP budget exhausted after " + std::to_string(lp_calls) + " solves; " +
                    std::to_string(partial_chambers) + " chambers seen (partial count, invalid)"),
      partial_chambers_(partial_chambers),
      lp_calls_(lp_calls) {}

void LpBudget::charge() {
  std::size_t n = used_.fetch_add(1) + 1;
  if (budget_ != 0 && n > budget_) throw BudgetExhausted(0, n);
}

ConstraintSystem build_constraints(std::size_t q, const MoveSet& moves) {
  if (q < 2) throw InvalidArgument("constraint system needs q >= 2");
  ConstraintSystem sys{q, moves, 2 * (q - 1), {}};
  for (std::size_t i = 2; i <= q; ++i)
    for (std::size_t j = 1; j < i; ++j)
      for (std::size_t m = 0; m < moves.size(); ++m) {
        const Direction& d = moves.direction(m);
        LinearForm form{j, i, m, std::vector<std::int64_t>(sys.dimension, 0)};
        // det(d, P_i - P_j) = dx (y_i - y_j) - dy (x_i - x_j)
        form.coeffs[var_x(i)] -= d.dy();
        form.coeffs[var_y(i)] += d.dx();
        if (j >= 2) {
          form.coeffs[var_x(j)] += d.dy();
          form.coeffs[var_y(j)] -= d.dx();
        }
        sys.forms.push_back(std::move(form));
      }
  return sys;
}

Placement placement_from_coordinates(std::span<const Rational> coords) {
  Placement out{{Rational(0), Rational(0)}};
  for (std::size_t c = 0; c + 1 < coords.size(); c += 2) out.push_back({coords[c], coords[c + 1]});
  return out;
}

std::optional<std::vector<Rational>> strict_feasible(const ConstraintSystem& system,
                                                     std::span<const std::int8_t> partial_signs) {
  if (partial_signs.size() > system.forms.size()) throw InvalidArgument("sign prefix longer than the system");
  InequalitySystem lp(system.dimension);
  for (std::size_t k = 0; k < partial_signs.size(); ++k) {
    if (partial_signs[k] != 1 && partial_signs[k] != -1) throw InvalidArgument("signs must be +1 or -1");
    lp.add_row(constraint_row(system.forms[k], partial_signs[k]), Rational(-1));
  }
  return find_feasible_point(lp);
}

Signature signature_of_signs(const ConstraintSystem& system, std::span<const std::int8_t> signs) {
  const std::size_t r = system.moves.size();
  if (signs.size() != system.forms.size()) throw InvalidArgument("sign vector length does not match the system");
  std::vector<int> labels(pair_count(system.q));
  for (std::size_t p = 0; p < labels.size(); ++p) {
    int label = system.moves.label_of_pattern(signs.subspan(p * r, r));
    if (label == 0) throw InfeasibleError("sign pattern of pair " + std::to_string(p + 1) + " matches no sector");
    labels[p] = label;
  }
  return Signature(std::move(labels), r);
}

SignPattern signs_of_signature(const ConstraintSystem& system, const Signature& sig) {
  if (sig.q() != system.q || sig.r() != system.moves.size())
    throw InvalidArgument("signature " + sig.to_string() + " does not fit the constraint system");
  SignPattern signs;
  signs.reserve(system.forms.size());
  for (int label : sig.entries()) {
    const SignPattern& p = system.moves.pattern_of_label(label);
    signs.insert(signs.end(), p.begin(), p.end());
  }
  return signs;
}

std::vector<Subtree> split_chambers(const ConstraintSystem& system, std::size_t depth, const EnumerationOptions& options,
                                    LpBudget& budget) {
  std::vector<Subtree> out;
  ChamberSearch search(system, options, budget);
  search.descend(std::vector<Rational>(system.dimension), std::min(depth, system.forms.size()),
                 [&](const SignPattern& s, const std::vector<Rational>& w) { out.push_back({s, w}); });
  return out;
}

std::size_t enumerate_subtree(const ConstraintSystem& system, const Subtree& root, const EnumerationOptions& options,
                              LpBudget& budget, const ChamberVisitor& visit) {
  std::size_t count = 0;
  ChamberSearch search(system, options, budget);
  search.start_from(root.prefix);
  search.descend(root.witness, system.forms.size(), [&](const SignPattern& s, const std::vector<Rational>& w) {
    ++count;
    if (visit) visit(s, w);
  });
  return count;
}

EnumerationStats enumerate_chambers(const ConstraintSystem& system, const EnumerationOptions& options,
                                    const ChamberVisitor& visit) {
  LpBudget budget(options.lp_budget);
  EnumerationStats stats;
  try {
    enumerate_subtree(system, Subtree{{}, std::vector<Rational>(system.dimension)}, options, budget,
                      [&](const SignPattern& s, const std::vector<Rational>& w) {
                        ++stats.chamber_count;
                        if (visit) visit(s, w);
                      });
  } catch (const BudgetExhausted&) {
    throw BudgetExhausted(stats.chamber_count, budget.used());
  }
  stats.lp_calls = budget.used();
  return stats;
}

std::vector<Chamber> collect_chambers(const ConstraintSystem& system, const EnumerationOptions& options) {
  LpBudget budget(options.lp_budget);
  auto roots = split_chambers(system, split_depth(system), options, budget);
  auto parts = parallel_map(roots.size(), options.workers, [&](std::size_t job) {
    std::vector<Chamber> local;
    enumerate_subtree(system, roots[job], options, budget,
                      [&](const SignPattern& s, const std::vector<Rational>& w) { local.push_back({s, w}); });
    return local;
  });
  std::vector<Chamber> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

bool census_tractable(std::size_t q, std::size_t r, bool stretch) {
  if (q <= 3) return r <= 8;
  if (q == 4) return r <= 4 || (stretch && r <= 6);
  if (q == 5) return stretch && r <= 3;
  return false;
}

TypeCensus census(std::size_t q, const MoveSet& moves, const CensusOptions& options) {
  const std::size_t r = moves.size();
  if (q == 0) throw InvalidArgument("census needs q >= 1");
  if (!census_tractable(q, r, options.stretch))
    throw ResourceError("census q=" + std::to_string(q) + ", r=" + std::to_string(r) +
                        " is beyond the tractability limit" + (options.stretch ? "" : " (see --stretch)"));

  TypeCensus out;
  out.q = q;
  out.r = r;
  out.moveset = moves.to_string();

  if (q == 1) {
    out.chamber_count = 1;
    out.type_count = 1;
    if (options.keep_signatures) out.canonical_signatures.push_back(Signature({}, r));
    return out;
  }

  const ConstraintSystem system = build_constraints(q, moves);
  const EnumerationOptions& eopt = options.enumeration;
  LpBudget budget(eopt.lp_budget);
  std::atomic<std::size_t> seen{0};

  struct Partial {
    std::size_t chambers = 0;
    std::set<Signature> types;
    std::set<Signature> violations;
  };

  try {
    auto roots = split_chambers(system, split_depth(system), eopt, budget);
    auto parts = parallel_map(roots.size(), eopt.workers, [&](std::size_t job) {
      Partial local;
      local.chambers = enumerate_subtree(system, roots[job], eopt, budget,
                                         [&](const SignPattern& signs, const std::vector<Rational>&) {
                                           ++seen;
                                           Signature sig = signature_of_signs(system, signs);
                                           CanonicalForm form = canonical_form(sig);
                                           if (form.stabilizer_size != 1) local.violations.insert(sig);
                                           local.types.insert(std::move(form.canonical));
                                         });
      return local;
    });

    std::set<Signature> types;
    std::set<Signature> violations;
    for (auto& part : parts) {
      out.chamber_count += part.chambers;
      types.merge(part.types);
      violations.merge(part.violations);
    }
    out.type_count = types.size();
    out.freeness_violations.assign(violations.begin(), violations.end());
    if (options.keep_signatures) out.canonical_signatures.assign(types.begin(), types.end());
  } catch (const BudgetExhausted&) {
    throw BudgetExhausted(seen.load(), budget.used());
  }
  out.lp_calls = budget.used();
  return out;
}

Placement realize_type(const Signature& sig, const MoveSet& moves) {
  if (sig.r() != moves.size())
    throw InvalidArgument("signature uses r=" + std::to_string(sig.r()) + " but the moveset has r=" +
                          std::to_string(moves.size()));
  if (sig.q() == 1) return {{Rational(0), Rational(0)}};
  const ConstraintSystem system = build_constraints(sig.q(), moves);
  auto witness = strict_feasible(system, signs_of_signature(system, sig));
  if (!witness) throw InfeasibleError("signature " + sig.to_string() + " is not realizable");
  return placement_from_coordinates(*witness);
}

SandwichReport sandwich_check(const TypeCensus& c) {
  SandwichReport rep;
  const auto q = static_cast<unsigned>(c.q);
  const auto r = static_cast<unsigned>(c.r);
  rep.t_lower = t_lower(q, r);
  rep.t_upper = t_upper(q, r);
  rep.type_count = c.type_count;
  const Rational count(static_cast<unsigned long>(c.type_count));
  rep.lower_slack = count - rep.t_lower;
  rep.upper_slack = rep.t_upper - count;
  rep.holds = sgn(rep.lower_slack) >= 0 && sgn(rep.upper_slack) >= 0;
  rep.divisible = Integer(static_cast<unsigned long>(c.chamber_count)) ==
                  factorial(q) * Integer(static_cast<unsigned long>(c.type_count));
  rep.free_action = c.freeness_violations.empty();
  return rep;
}

}  // namespace riders
