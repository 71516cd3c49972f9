#pragma once

// Exact two-phase simplex over the rationals with free variables.

#include "horo/rational.hpp"

namespace horo {

enum class Relation { LessEq, Equal };

struct Constraint {
  RatCovector coeffs;
  Relation relation = Relation::LessEq;
  Rational bound;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational optimum;    // set when Optimal
  RatVector witness;   // optimal point, or a recession ray when Unbounded
};

/// Maximizes <objective, x> over x in Q^d subject to the constraints. Pivoting
/// follows Bland's rule, so the result is deterministic for a fixed input
/// order. Throws DimensionError when a constraint's length differs from d.
LPResult lp_maximize(const RatCovector& objective, const std::vector<Constraint>& constraints);

}  // namespace horo
