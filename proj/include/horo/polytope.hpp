#pragma once

// The unit ball B = {u : xi_k(u) <= 1 for all k} of an asymmetric polyhedral
// norm, and the norm it induces.

#include "horo/face_set.hpp"
#include "horo/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace horo {

/// Raised for inputs that are well-formed but outside the mathematical
/// domain: invalid polytopes, subsets that are not dual faces, and the like.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Polytope {
 public:
  /// Throws DomainError on an empty facet list, a zero covector, a repeated
  /// covector or more than 64 facets; DimensionError on length mismatch.
  Polytope(std::size_t dim, std::vector<RatCovector> facets, std::string name = {});

  std::size_t dim() const { return dim_; }
  std::size_t num_facets() const { return facets_.size(); }
  const std::vector<RatCovector>& facets() const { return facets_; }
  const RatCovector& facet(std::size_t k) const { return facets_.at(k); }
  const std::string& name() const { return name_; }
  /// The full index set K.
  FaceSet all() const { return FaceSet::all(facets_.size()); }

  /// Values xi_k(u) for every facet.
  std::vector<Rational> values(const RatVector& u) const;

  /// Hash of (dim, facets); identifies the polytope a horofunction belongs to.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  std::size_t dim_;
  std::vector<RatCovector> facets_;
  std::string name_;
  std::uint64_t fingerprint_ = 0;
};

enum class ValidationFailure { None, Unbounded, Redundant };

struct ValidationReport {
  ValidationFailure failure = ValidationFailure::None;
  std::string message;
  // Recession direction (Unbounded) or empty.
  RatVector certificate;
  // Offending facet index (Redundant).
  std::size_t facet = 0;

  bool valid() const { return failure == ValidationFailure::None; }
};

/// Checks boundedness, then irredundancy, and reports the first violated
/// condition. Fewer than dim + 1 facets always fail boundedness.
ValidationReport validate(const Polytope& p);

/// Throws DomainError carrying the validation message if p is invalid.
void require_valid(const Polytope& p);

/// nu(u) = max_k xi_k(u)
Rational norm(const Polytope& p, const RatVector& u);

/// nu_L(u) = max_{l in L} xi_l(u); may be negative. Throws
/// std::invalid_argument for empty L.
Rational partial_norm(const Polytope& p, FaceSet face, const RatVector& u);

/// delta(u, v) = nu(u - v)
Rational asym_distance(const Polytope& p, const RatVector& u, const RatVector& v);

/// v with xi_l(v) = 1 on `face` and xi_k(v) < 1 elsewhere, found by
/// maximizing a slack s in xi_k(v) + s <= 1. nullopt when no such v exists.
std::optional<RatVector> strict_face_witness(const Polytope& p, FaceSet face);

/// All vertices of B in ascending lexicographic order.
std::vector<RatVector> vertices(const Polytope& p);

/// Constants with ||u|| <= alpha nu(u), nu(u) <= beta ||u|| and
/// |(xi_k - xi_l)(u)| <= gamma ||u||. Floats are rounded up; the squared
/// values are exact.
struct MetricConstants {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
  Rational alpha_squared;
  Rational beta_squared;
  Rational gamma_squared;
};

MetricConstants metric_constants(const Polytope& p);

}  // namespace horo
