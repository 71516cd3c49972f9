#pragma once

// Brute-force validators for small instances, plus the random instance
// generators used by the test batteries. Nothing here is fast.

#include "horo/horofunction.hpp"

#include <random>
#include <set>

namespace horo::oracle {

inline constexpr std::size_t kBruteForceFacetCap = 20;

/// Sigma by the definition: every nonempty subset of K goes through its own
/// strict-witness LP. Throws std::invalid_argument above the facet cap.
std::vector<DualFace> faces_bruteforce(const Polytope& p);

struct GridDifference {
  Rational max_difference;
  RatVector at;  // a grid point attaining it
};

/// Calls f on every point of {-r + 2 r i / steps : 0 <= i <= steps}^d.
template <class F>
void for_each_grid_point(std::size_t d, const Rational& radius, std::size_t steps, F&& f);

/// max |h1(u) - h2(u)| over the grid. Throws std::invalid_argument for steps < 2.
GridDifference horofunction_grid_compare(const Compactification& c, const Horofunction& h1,
                                         const Horofunction& h2, const Rational& radius,
                                         std::size_t steps);

/// max over the grid of |nu(p + t w - u) - nu(p + t w) - ray_limit(p, w)(u)|.
GridDifference ray_sample_compare(const Compactification& c, const RatVector& p,
                                  const RatVector& w, const Rational& t, const Rational& radius,
                                  std::size_t steps);

/// Faces of B (proper, including the empty face) as sets of vertex indices
/// into vertices(p), obtained by intersecting facet vertex sets.
std::set<std::vector<std::size_t>> primal_faces(const Polytope& p);

struct Check {
  bool ok = true;
  std::string detail;
};

/// Whether L -> {vertices v : L is a subset of A(v)} is a bijection from the
/// poset nodes onto primal_faces(p) that reverses inclusion.
Check check_poset_duality(const Polytope& p, const StrataPoset& poset);

// Random instances.
using Rng = std::mt19937_64;

/// Entries n/q with |n| <= numerator_bound and q in {1, ..., max_denominator}.
RatVector random_vector(Rng& rng, std::size_t d, int numerator_bound = 5, int max_denominator = 3);
RatVector random_nonzero_vector(Rng& rng, std::size_t d, int numerator_bound = 5,
                                int max_denominator = 3);

/// A random valid polytope with at least `min_facets` facets; facets come
/// from random rational covectors, pruned of redundant ones.
Polytope random_polytope(Rng& rng, std::size_t d, std::size_t min_facets);

/// A random point of H_L^+: a positive combination of the dual face witness
/// and small perturbations inside H_L that keep every gap positive.
RatVector random_positive_cone_point(Rng& rng, const Compactification& c, FaceSet face);

struct SelftestRow {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Cross-validation battery: faces vs brute force and poset duality on the
/// shipped polytopes, then randomized ray agreement, partition and
/// stabilizer checks.
std::vector<SelftestRow> selftest(std::uint64_t seed);

template <class F>
void for_each_grid_point(std::size_t d, const Rational& radius, std::size_t steps, F&& f) {
  std::vector<std::size_t> idx(d, 0);
  RatVector u(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i) {
      u[i] = steps == 0 ? Rational(0) : -radius + 2 * radius * Rational(idx[i]) / Rational(steps);
    }
    f(static_cast<const RatVector&>(u));
    std::size_t i = 0;
    while (i < d && idx[i] == steps) idx[i++] = 0;
    if (i == d) return;
    ++idx[i];
  }
}

}  // namespace horo::oracle
