#include "riders/simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace riders {

void InequalitySystem::add_row(std::span<const Rational> coeffs, const Rational& rhs) {
  if (coeffs.size() != num_vars_) throw std::invalid_argument("row width does not match the system");
  coeffs_.insert(coeffs_.end(), coeffs.begin(), coeffs.end());
  rhs_.push_back(rhs);
}

void InequalitySystem::pop_row() {
  if (rhs_.empty()) return;
  coeffs_.resize(coeffs_.size() - num_vars_);
  rhs_.pop_back();
}

namespace {

// Dictionary: basic[i] = rhs[i] + sum_j T(i, j) * nonbasic[j].
// Variable ids: [0, n) structural (free), [n, n+m) slacks, n+m artificial.
class Dictionary {
 public:
  explicit Dictionary(const InequalitySystem& sys)
      : n_(sys.num_vars()), m_(sys.num_rows()), cols_(n_ + 1), t_(m_ * cols_), rhs_(m_), basic_(m_), nonbasic_(cols_),
        obj_(cols_) {
    for (std::size_t i = 0; i < m_; ++i) {
      auto row = sys.row(i);
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = -row[j];
      rhs_[i] = sys.rhs(i);
      basic_[i] = n_ + i;
    }
    for (std::size_t j = 0; j < n_; ++j) nonbasic_[j] = j;
    nonbasic_[n_] = artificial();
  }

  std::size_t pivots() const { return pivots_; }

  // Pivot every structural variable into the basis where some slack row
  // involves it. Structural columns with no such row stay nonbasic at zero.
  void enter_free_variables() {
    for (std::size_t var = 0; var < n_; ++var) {
      std::size_t e = column_of(var);
      for (std::size_t i = 0; i < m_; ++i) {
        if (!is_free(basic_[i]) && sgn(at(i, e)) != 0) {
          pivot(i, e);
          break;
        }
      }
    }
  }

  bool phase_one() {
    std::size_t worst = m_;
    for (std::size_t i = 0; i < m_; ++i) {
      if (is_free(basic_[i])) continue;
      if (sgn(rhs_[i]) < 0 && (worst == m_ || rhs_[i] < rhs_[worst])) worst = i;
    }
    if (worst == m_) {
      artificial_active_ = false;
      return true;
    }

    const std::size_t a = column_of(artificial());
    for (std::size_t i = 0; i < m_; ++i) at(i, a) = is_free(basic_[i]) ? 0 : 1;
    artificial_active_ = true;
    pivot(worst, a);

    // maximize -artificial
    const std::size_t row = row_of(artificial());
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] = -at(row, j);
    obj_z_ = -rhs_[row];
    run(/*allow_artificial=*/true);

    if (sgn(obj_z_) < 0) return false;

    // Drive the artificial out of the basis if it is still there at level zero.
    if (auto r = basic_row(artificial())) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (is_free(nonbasic_[j]) || sgn(at(*r, j)) == 0) continue;
        pivot(*r, j);
        break;
      }
    }
    artificial_active_ = false;
    return true;
  }

  // Returns false when unbounded.
  bool phase_two(std::span<const Rational> c) {
    std::fill(obj_.begin(), obj_.end(), Rational(0));
    obj_z_ = 0;
    for (std::size_t var = 0; var < n_; ++var) {
      if (sgn(c[var]) == 0) continue;
      if (auto r = basic_row(var)) {
        for (std::size_t j = 0; j < cols_; ++j) obj_[j] += c[var] * at(*r, j);
        obj_z_ += c[var] * rhs_[*r];
      } else {
        obj_[column_of(var)] += c[var];
      }
    }
    // A structural variable left out of the basis is unconstrained.
    for (std::size_t j = 0; j < cols_; ++j)
      if (is_free(nonbasic_[j]) && sgn(obj_[j]) != 0) return false;
    return run(/*allow_artificial=*/false);
  }

  std::vector<Rational> structural_values() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basic_[i] < n_) x[basic_[i]] = rhs_[i];
    return x;
  }

  const Rational& objective_value() const { return obj_z_; }

 private:
  std::size_t artificial() const { return n_ + m_; }
  bool is_free(std::size_t var) const { return var < n_; }

  Rational& at(std::size_t i, std::size_t j) { return t_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i * cols_ + j]; }

  std::size_t column_of(std::size_t var) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if (nonbasic_[j] == var) return j;
    assert(false && "variable is basic");
    return cols_;
  }

  std::optional<std::size_t> basic_row(std::size_t var) const {
    for (std::size_t i = 0; i < m_; ++i)
      if (basic_[i] == var) return i;
    return std::nullopt;
  }

  std::size_t row_of(std::size_t var) const { return *basic_row(var); }

  bool may_enter(std::size_t var, bool allow_artificial) const {
    if (is_free(var)) return false;
    if (var == artificial()) return allow_artificial && artificial_active_;
    return true;
  }

  // Bland's rule on the current objective row. Returns false on unboundedness.
  bool run(bool allow_artificial) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!may_enter(nonbasic_[j], allow_artificial) || sgn(obj_[j]) <= 0) continue;
        if (enter == cols_ || nonbasic_[j] < nonbasic_[enter]) enter = j;
      }
      if (enter == cols_) return true;

      std::size_t leave = m_;
      Rational best_ratio;
      Rational ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (is_free(basic_[i]) || sgn(at(i, enter)) >= 0) continue;
        ratio = -rhs_[i] / at(i, enter);
        if (leave == m_ || ratio < best_ratio || (ratio == best_ratio && basic_[i] < basic_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    ++pivots_;
    Rational inv = 1 / at(r, e);
    // Solve row r for the entering variable.
    Rational* row = &t_[r * cols_];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j == e) continue;
      if (sgn(row[j]) != 0) row[j] *= -inv;
    }
    rhs_[r] *= -inv;
    row[e] = inv;

    Rational tmp;
    auto eliminate = [&](Rational* target, Rational& target_rhs) {
      if (sgn(target[e]) == 0) return;
      const Rational factor = target[e];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j == e || sgn(row[j]) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), row[j].get_mpq_t());
        mpq_add(target[j].get_mpq_t(), target[j].get_mpq_t(), tmp.get_mpq_t());
      }
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), rhs_[r].get_mpq_t());
      mpq_add(target_rhs.get_mpq_t(), target_rhs.get_mpq_t(), tmp.get_mpq_t());
      mpq_mul(target[e].get_mpq_t(), factor.get_mpq_t(), inv.get_mpq_t());
    };
    for (std::size_t i = 0; i < m_; ++i)
      if (i != r) eliminate(&t_[i * cols_], rhs_[i]);
    eliminate(obj_.data(), obj_z_);

    std::swap(basic_[r], nonbasic_[e]);
  }

  std::size_t n_, m_, cols_;
  std::vector<Rational> t_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::vector<Rational> obj_;
  Rational obj_z_;
  bool artificial_active_ = false;
  std::size_t pivots_ = 0;
};

}  // namespace

LpSolution maximize(const InequalitySystem& system, std::span<const Rational> objective) {
  if (objective.size() != system.num_vars()) throw std::invalid_argument("objective width does not match the system");
  Dictionary dict(system);
  dict.enter_free_variables();
  LpSolution out;
  if (!dict.phase_one()) {
    out.status = LpStatus::infeasible;
    out.pivots = dict.pivots();
    return out;
  }
  bool bounded = dict.phase_two(objective);
  out.status = bounded ? LpStatus::optimal : LpStatus::unbounded;
  out.x = dict.structural_values();
  if (bounded) out.objective = dict.objective_value();
  out.pivots = dict.pivots();
  return out;
}

std::optional<std::vector<Rational>> find_feasible_point(const InequalitySystem& system) {
  Dictionary dict(system);
  dict.enter_free_variables();
  if (!dict.phase_one()) return std::nullopt;
  return dict.structural_values();
}

}  // namespace riders
