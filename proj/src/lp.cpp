#include "horo/lp.hpp"

#include <optional>

namespace horo {

namespace {

// Dense tableau in equality form: rows[i] · z = rhs[i], z >= 0.
class Tableau {
 public:
  Tableau(RatMatrix rows, std::vector<std::size_t> basis, std::size_t cols)
      : rows_(std::move(rows)), basis_(std::move(basis)), cols_(cols), banned_(cols, false) {}

  void ban(std::size_t col) { banned_[col] = true; }

  // Reduced-cost row for maximizing cost · z given the current basis.
  void set_objective(const RatVector& cost) {
    obj_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] = -cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) obj_[j] += cb * rows_[i][j];
    }
  }

  // Runs Bland's rule to optimality. Returns the entering column of an
  // unbounded edge, or nullopt when optimal.
  std::optional<std::size_t> run() {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!banned_[j] && obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return std::nullopt;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][*enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i][cols_] / a;
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) return enter;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& x : rows_[r]) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) rows_[i][j] -= f * rows_[r][j];
    }
    if (obj_[c] != 0) {
      const Rational f = obj_[c];
      for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  const Rational& value() const { return obj_[cols_]; }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  const Rational& entry(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Rational& rhs(std::size_t r) const { return rows_[r][cols_]; }

  RatVector primal() const {
    RatVector z = zero_vector(cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i) z[basis_[i]] = rows_[i][cols_];
    return z;
  }

  // Edge direction when column c enters without a blocking row.
  RatVector ray(std::size_t c) const {
    RatVector z = zero_vector(cols_);
    z[c] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) z[basis_[i]] = -rows_[i][c];
    return z;
  }

 private:
  RatMatrix rows_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
  std::vector<bool> banned_;
  RatVector obj_;
};

}  // namespace

LPResult lp_maximize(const RatCovector& objective, const std::vector<Constraint>& constraints) {
  const std::size_t n = objective.size();
  const std::size_t m = constraints.size();
  std::size_t slacks = 0;
  for (const auto& c : constraints) {
    require_same_dim(c.coeffs.size(), n, "lp_maximize");
    if (c.relation == Relation::LessEq) ++slacks;
  }

  // Columns: x+ (n), x- (n), slacks, artificials (m).
  const std::size_t art0 = 2 * n + slacks;
  const std::size_t cols = art0 + m;
  RatMatrix rows(m, RatVector(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  std::size_t s = 2 * n;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    auto& row = rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = c.coeffs[j];
      row[n + j] = -c.coeffs[j];
    }
    if (c.relation == Relation::LessEq) row[s++] = 1;
    row[cols] = c.bound;
    if (c.bound < 0) {
      for (auto& x : row) x = -x;
    }
    row[art0 + i] = 1;
    basis[i] = art0 + i;
  }

  Tableau t(std::move(rows), std::move(basis), cols);
  RatVector phase1(cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = -1;
  t.set_objective(phase1);
  t.run();
  if (t.value() < 0) return LPResult{LPStatus::Infeasible, Rational(0), {}};

  // Drive zero-level artificials out of the basis; rows that cannot pivot
  // are linearly dependent and dropped.
  for (std::size_t r = 0; r < t.num_rows();) {
    if (t.basic(r) < art0) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < art0; ++j) {
      if (t.entry(r, j) != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      t.pivot(r, *col);
      ++r;
    } else {
      t.drop_row(r);
    }
  }
  for (std::size_t j = art0; j < cols; ++j) t.ban(j);

  RatVector phase2(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = objective[j];
    phase2[n + j] = -objective[j];
  }
  t.set_objective(phase2);
  const auto unbounded = t.run();

  auto to_x = [n](const RatVector& z) {
    RatVector x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = z[j] - z[n + j];
    return x;
  };
  if (unbounded) {
    return LPResult{LPStatus::Unbounded, Rational(0), to_x(t.ray(*unbounded))};
  }
  return LPResult{LPStatus::Optimal, t.value(), to_x(t.primal())};
}

}  // namespace horo
