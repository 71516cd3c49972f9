#include "horo/linalg.hpp"

#include <stdexcept>

namespace horo {

std::vector<std::size_t> row_reduce(RatMatrix& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t j = c; j < rows[r].size(); ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank(RatMatrix rows, std::size_t cols) { return row_reduce(rows, cols).size(); }

Subspace::Subspace(std::size_t ambient_dim, const std::vector<RatVector>& spanning)
    : ambient_(ambient_dim), basis_(spanning) {
  for (const auto& v : basis_) require_same_dim(v.size(), ambient_, "Subspace");
  pivots_ = row_reduce(basis_, ambient_);
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<RatVector> e;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    RatVector v = zero_vector(ambient_dim);
    v[i] = 1;
    e.push_back(std::move(v));
  }
  return Subspace(ambient_dim, e);
}

Subspace Subspace::kernel(const RatMatrix& rows, std::size_t ambient_dim) {
  RatMatrix m = rows;
  for (const auto& r : m) require_same_dim(r.size(), ambient_dim, "Subspace::kernel");
  const auto pivots = row_reduce(m, ambient_dim);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> gens;
  for (std::size_t f = 0; f < ambient_dim; ++f) {
    if (is_pivot[f]) continue;
    RatVector v = zero_vector(ambient_dim);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    gens.push_back(std::move(v));
  }
  return Subspace(ambient_dim, gens);
}

bool Subspace::contains(const RatVector& v) const {
  require_same_dim(v.size(), ambient_, "Subspace::contains");
  RatVector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_[i][j];
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& b : other.basis()) {
    if (!contains(b)) return false;
  }
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  require_same_dim(ambient_, other.ambient_, "Subspace sum");
  std::vector<RatVector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(ambient_, all);
}

RatMatrix Subspace::equations() const { return kernel(basis_, ambient_).basis(); }

Subspace Subspace::intersect(const Subspace& other) const {
  require_same_dim(ambient_, other.ambient_, "Subspace intersection");
  RatMatrix eqs = equations();
  for (auto& e : other.equations()) eqs.push_back(e);
  return kernel(eqs, ambient_);
}

std::optional<LinearSolution> solve_linear_system(const RatMatrix& a, const RatVector& b,
                                                  std::size_t cols) {
  require_same_dim(a.size(), b.size(), "solve_linear_system");
  RatMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    require_same_dim(aug[i].size(), cols, "solve_linear_system");
    aug[i].push_back(b[i]);
  }
  const auto pivots = row_reduce(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVector x = zero_vector(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return LinearSolution{std::move(x), Subspace::kernel(a, cols)};
}

Subspace orthogonal_complement_within(const Subspace& s, const Subspace& ambient) {
  if (!ambient.contains(s)) {
    throw std::invalid_argument("orthogonal_complement_within: subspace not contained in ambient");
  }
  return ambient.intersect(Subspace::kernel(s.basis(), s.ambient_dim()));
}

RatVector orthogonal_projection(const RatVector& x, const Subspace& s) {
  require_same_dim(x.size(), s.ambient_dim(), "orthogonal_projection");
  const auto& basis = s.basis();
  const std::size_t k = basis.size();
  if (k == 0) return zero_vector(x.size());
  RatMatrix gram(k, RatVector(k));
  RatVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], x);
  }
  const auto sol = solve_linear_system(gram, rhs, k);
  RatVector y = zero_vector(x.size());
  for (std::size_t i = 0; i < k; ++i) y = y + sol->particular[i] * basis[i];
  return y;
}

std::pair<RatVector, RatVector> decompose(const RatVector& x, const Subspace& first,
                                          const Subspace& second) {
  const std::size_t d = x.size();
  require_same_dim(first.ambient_dim(), d, "decompose");
  require_same_dim(second.ambient_dim(), d, "decompose");
  const std::size_t k1 = first.dim();
  const std::size_t k = k1 + second.dim();
  RatMatrix m(d, RatVector(k));
  for (std::size_t j = 0; j < k; ++j) {
    const RatVector& col = j < k1 ? first.basis()[j] : second.basis()[j - k1];
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
  }
  const auto sol = solve_linear_system(m, x, k);
  if (!sol || sol->kernel.dim() != 0) {
    throw std::invalid_argument("decompose: subspaces are not complementary");
  }
  RatVector a = zero_vector(d);
  RatVector b = zero_vector(d);
  for (std::size_t j = 0; j < k; ++j) {
    if (j < k1) {
      a = a + sol->particular[j] * first.basis()[j];
    } else {
      b = b + sol->particular[j] * second.basis()[j - k1];
    }
  }
  return {std::move(a), std::move(b)};
}

}  // namespace horo
