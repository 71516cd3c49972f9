#pragma once

// Named test polytopes.

#include "horo/polytope.hpp"

namespace horo::catalog {

/// The d-cube [-1,1]^d, facets ordered +e_1, -e_1, +e_2, -e_2, ...
Polytope cube(std::size_t d);

/// The square in the order {+e_1, -e_1, +e_2, -e_2}: SQ.
inline Polytope square() { return cube(2); }

/// Facets (1,0), (0,1), (-1/2,-1/2): an asymmetric triangle.
Polytope triangle();

/// |x|, |y|, |x+y| <= 1: an affinely regular hexagon.
Polytope hexagon();

/// A rational pentagon with no symmetry.
Polytope pentagon();

/// d = 1, facets {1, -1}.
Polytope segment();

/// cube(2), cube(3), triangle, hexagon, pentagon.
std::vector<Polytope> shipped();

}  // namespace horo::catalog
