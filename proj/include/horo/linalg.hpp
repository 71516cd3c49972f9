#pragma once

// Exact dense linear algebra over the rationals.

#include "horo/rational.hpp"

#include <optional>
#include <utility>

namespace horo {

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> row_reduce(RatMatrix& rows, std::size_t cols);

std::size_t rank(RatMatrix rows, std::size_t cols);

/// A linear subspace of Q^d. The stored basis is the reduced row echelon
/// basis, so two Subspace values describing the same set compare equal.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the given vectors (need not be independent).
  Subspace(std::size_t ambient_dim, const std::vector<RatVector>& spanning);

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// {u : <row, u> = 0 for every row}.
  static Subspace kernel(const RatMatrix& rows, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatVector>& basis() const { return basis_; }

  bool contains(const RatVector& v) const;
  bool contains(const Subspace& other) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Covectors whose common kernel is this subspace.
  RatMatrix equations() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<RatVector> basis_;
  std::vector<std::size_t> pivots_;
};

struct LinearSolution {
  RatVector particular;
  Subspace kernel;
};

/// Solves A x = b exactly. Returns nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear_system(const RatMatrix& a, const RatVector& b,
                                                  std::size_t cols);

/// T with T + S = ambient and T orthogonal to S under the standard inner
/// product. Throws std::invalid_argument if S is not inside ambient.
Subspace orthogonal_complement_within(const Subspace& s, const Subspace& ambient);

/// Orthogonal projection of x onto S.
RatVector orthogonal_projection(const RatVector& x, const Subspace& s);

/// Splits x = a + b with a in `first`, b in `second`, where first and second
/// are complementary (first + second = V, first ∩ second = {0}).
std::pair<RatVector, RatVector> decompose(const RatVector& x, const Subspace& first,
                                          const Subspace& second);

}  // namespace horo
