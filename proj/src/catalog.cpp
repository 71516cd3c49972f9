#include "horo/catalog.hpp"

namespace horo::catalog {

namespace {

RatCovector cov(std::initializer_list<Rational> xs) { return RatCovector(xs); }

}  // namespace

Polytope cube(std::size_t d) {
  std::vector<RatCovector> facets;
  for (std::size_t i = 0; i < d; ++i) {
    RatCovector e = zero_vector(d);
    e[i] = 1;
    facets.push_back(e);
    facets.push_back(-e);
  }
  return Polytope(d, std::move(facets), d == 2 ? "square" : std::to_string(d) + "-cube");
}

Polytope triangle() {
  return Polytope(2, {cov({1, 0}), cov({0, 1}), cov({Rational(-1, 2), Rational(-1, 2)})},
                  "triangle");
}

Polytope hexagon() {
  return Polytope(2,
                  {cov({1, 0}), cov({1, 1}), cov({0, 1}), cov({-1, 0}), cov({-1, -1}), cov({0, -1})},
                  "hexagon");
}

Polytope pentagon() {
  return Polytope(2,
                  {cov({1, 0}), cov({Rational(1, 2), 1}), cov({-1, Rational(1, 2)}),
                   cov({-1, -1}), cov({Rational(1, 3), -1})},
                  "pentagon");
}

Polytope segment() { return Polytope(1, {cov({1}), cov({-1})}, "segment"); }

std::vector<Polytope> shipped() {
  return {cube(2), cube(3), triangle(), hexagon(), pentagon()};
}

}  // namespace horo::catalog
