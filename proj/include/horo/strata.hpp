#pragma once

// Dual faces of the unit ball and the strata of the compactification they
// index. A stratum label is a FaceSet: either a dual face L, or the full
// index set K, which stands for the interior V itself. K is never a dual face
// of a bounded ball, so the encoding is unambiguous and the closure order
// "L' <= L iff L' contains L" applies to the interior uniformly.

#include "horo/face_set.hpp"
#include "horo/linalg.hpp"
#include "horo/polytope.hpp"

#include <utility>

namespace horo {

/// A dual face L with a point v, nu(v) = 1, whose active set is exactly L.
struct DualFace {
  FaceSet members;
  RatVector witness;
};

struct Stratum {
  FaceSet label;          // L, or K for the interior
  bool interior = false;
  RatVector witness;      // empty for the interior
  Subspace h;             // H_L; {0} for the interior
  Subspace w;             // complement of H_L inside eta^perp; V for the interior
  RatCovector eta;        // sum of xi_l over L; zero for the interior
  // cl(H_L^+) = {u in H_L : <c, u> >= 0 for every c in cone_closure}.
  std::vector<RatCovector> cone_closure;
};

/// Sigma in the order of face_order_less, each face certified by an exact LP
/// witness. Candidates come from intersecting vertex active sets.
std::vector<DualFace> enumerate_dual_faces(const Polytope& p);

/// Throws DomainError when `label` is neither a dual face nor K.
Stratum build_stratum(const Polytope& p, FaceSet label);

/// K(w) = {l : xi_l(w) = nu(w)}, with witness w / nu(w). Throws
/// std::invalid_argument for w = 0.
DualFace active_face(const Polytope& p, const RatVector& w);

/// w in H_L^+ (for the interior, H_K^+ = {0}).
bool in_positive_cone(const Stratum& s, const RatVector& w);

/// w in cl(H_L^+).
bool in_cone_closure(const Stratum& s, const RatVector& w);

/// xi_l(v) <= 0 for all l in L. Throws std::invalid_argument for empty L.
bool in_negative_cone(const Polytope& p, FaceSet face, const RatVector& v);

/// xi_k(v) > xi_l(v) for all l in L \ {k}. Throws std::invalid_argument
/// when k is not in L.
bool chamber_cone(const Polytope& p, std::size_t k, FaceSet face, const RatVector& v);

/// Strata ordered by closure: V_{L'} lies in the closure of V_L iff L' is a
/// subset of L.
struct StrataPoset {
  FaceSet interior;            // K
  std::vector<FaceSet> nodes;  // K first, then Sigma in face order
  // Covering pairs (upper, lower) as node indices: lower is a maximal proper
  // subset of upper, so V_lower is a maximal stratum in the boundary of V_upper.
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  /// Poset order: a <= b iff a contains b.
  static bool leq(FaceSet a, FaceSet b) { return b.is_subset_of(a); }
  /// Labels of the strata making up the closure of V_label.
  std::vector<FaceSet> closure(FaceSet label) const;
};

StrataPoset closure_poset(const Polytope& p);
StrataPoset closure_poset(const Polytope& p, const std::vector<DualFace>& faces);

}  // namespace horo
