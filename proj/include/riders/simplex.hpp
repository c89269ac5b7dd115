#pragma once

// Exact rational simplex for small dense problems
//
//     maximize  c . x   subject to   A x <= b,   x free in R^n.
//
// Dictionary form with Bland's rule in both phases, so it terminates on
// degenerate problems without perturbation. Free variables are pivoted into
// the basis first and never leave it; phase 1 uses a single artificial
// variable added to the remaining (slack) rows.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "riders/rational.hpp"

namespace riders {

/// Row-major inequality system A x <= b.
class InequalitySystem {
 public:
  explicit InequalitySystem(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_rows() const { return rhs_.size(); }

  /// coeffs.size() must equal num_vars().
  void add_row(std::span<const Rational> coeffs, const Rational& rhs);
  void pop_row();

  std::span<const Rational> row(std::size_t i) const {
    return {coeffs_.data() + i * num_vars_, num_vars_};
  }
  const Rational& rhs(std::size_t i) const { return rhs_[i]; }

 private:
  std::size_t num_vars_;
  std::vector<Rational> coeffs_;
  std::vector<Rational> rhs_;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> x;  // set when optimal (or a feasible point when unbounded)
  Rational objective;
  std::size_t pivots = 0;
};

/// Maximize objective . x over the system. `objective` must have num_vars() entries.
LpSolution maximize(const InequalitySystem& system, std::span<const Rational> objective);

/// Any point satisfying the system, or nullopt when it is empty.
std::optional<std::vector<Rational>> find_feasible_point(const InequalitySystem& system);

}  // namespace riders
