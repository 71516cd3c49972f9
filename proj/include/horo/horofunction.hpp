#pragma once

// Points of the horofunction compactification V^ of (V, nu), stored as
// (stratum, canonical representative), with base point o = 0.
//
// An interior point p stands for u -> nu(p - u) - nu(p). A boundary point with
// dual face L and representative w in W_L stands for u -> nu_L(w - u) - nu_L(w).
// Representatives are unique, so equality of points is component-wise.

#include "horo/polytope.hpp"
#include "horo/strata.hpp"

#include <map>
#include <optional>

namespace horo {

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Horofunction {
  FaceSet stratum;          // dual face L, or K for an interior point
  bool interior = false;
  RatVector rep;            // p itself, or the W_L component of p
  std::uint64_t context = 0;  // fingerprint of the owning polytope

  friend bool operator==(const Horofunction&, const Horofunction&) = default;
};

/// U(L, eps, q). With label K this is the euclidean ball q + B_eps(0) in V;
/// otherwise it is D = q + B_eps(0) + H_L^+ together with its images in every
/// stratum V_L' with L' containing L.
struct Neighborhood {
  FaceSet label;
  Rational epsilon;
  RatVector q;
};

struct TailTolerances {
  // Gap-stability window, relative to 1 + max_k |xi_k(p_n)|.
  double tie_relative = 1e-6;
  // Euclidean Cauchy tolerance on W_L projections.
  double cauchy = 1e-9;
};

/// A validated polytope together with its dual faces and strata. Every
/// operation on horofunctions goes through one of these.
class Compactification {
 public:
  /// Throws DomainError when p fails validation.
  explicit Compactification(Polytope p);

  const Polytope& polytope() const { return polytope_; }
  std::size_t dim() const { return polytope_.dim(); }
  FaceSet interior_label() const { return polytope_.all(); }
  const std::vector<DualFace>& dual_faces() const { return faces_; }
  const MetricConstants& constants() const { return constants_; }

  bool is_dual_face(FaceSet label) const;
  /// Stratum for a dual face or K; throws DomainError otherwise.
  const Stratum& stratum(FaceSet label) const;

  Horofunction interior(RatVector p) const;
  /// The point p + H_L of V_L, represented in W_L. Label K gives interior(p).
  Horofunction canonicalize(FaceSet label, const RatVector& p) const;

  Rational evaluate(const Horofunction& h, const RatVector& u) const;
  /// Throws ContextMismatch when h1 and h2 belong to different polytopes.
  bool equal(const Horofunction& h1, const Horofunction& h2) const;
  Horofunction translate(const Horofunction& h, const RatVector& w) const;

  /// Limit of u -> nu(p + t w - u) - nu(p + t w) as t -> infinity.
  Horofunction ray_limit(const RatVector& p, const RatVector& w) const;

  /// t0 >= 0 such that for t >= t0 and ||u|| <= r the normalized function
  /// along the ray equals the limit horofunction exactly. Certified from the
  /// per-facet gaps (xi_l - xi_k)(w) and rational upper bounds on
  /// ||xi_l - xi_k||. Throws std::invalid_argument for w = 0 or r < 0.
  Rational ray_agreement_threshold(const RatVector& p, const RatVector& w,
                                   const Rational& r) const;

  /// Heuristic limit of a sampled sequence from its last `window` points.
  /// Indices whose gap nu(p_n) - xi_k(p_n) stays put form L, all other gaps
  /// must increase strictly, and the W_L projections must be Cauchy. Returns
  /// nullopt when any of these fails. Throws std::invalid_argument when
  /// window < 2 or window exceeds the sample.
  std::optional<Horofunction> classify_tail(const std::vector<RatVector>& points,
                                            std::size_t window,
                                            const TailTolerances& tol = {}) const;

  /// Membership of h in U(L, eps, q). Throws std::invalid_argument for eps <= 0.
  bool neighborhood_contains(const Neighborhood& n, const Horofunction& h) const;

  /// Exact squared euclidean distance from x to cl(H_L^+) + H_{L'}, for
  /// L' containing L (either may be K).
  Rational squared_cone_distance(FaceSet label, FaceSet outer, const RatVector& x) const;

 private:
  void check_context(const Horofunction& h) const;

  Polytope polytope_;
  std::vector<DualFace> faces_;
  std::map<std::uint64_t, Stratum> strata_;
  MetricConstants constants_;
};

}  // namespace horo
