#include "doctest.h"
#include "support.hpp"

#include "horo/catalog.hpp"
#include "horo/oracle.hpp"
#include "horo/polytope.hpp"

using namespace horo;
using testing::face;
using testing::q;
using testing::vec;

namespace {
const Polytope SQ = catalog::square();
const Polytope TRI = catalog::triangle();
}  // namespace

TEST_CASE("construction rejects degenerate facet lists") {
  CHECK_THROWS_AS(Polytope(2, {}), DomainError);
  CHECK_THROWS_AS(Polytope(2, {vec({1, 0}), vec({0, 0})}), DomainError);
  CHECK_THROWS_AS(Polytope(2, {vec({1, 0}), vec({1, 0})}), DomainError);
  CHECK_THROWS_AS(Polytope(2, {vec({1, 0, 0})}), DimensionError);
  std::vector<RatCovector> many;
  for (int i = 0; i < 65; ++i) many.push_back(vec({i + 1}));
  CHECK_THROWS_AS(Polytope(1, many), DomainError);
}

TEST_CASE("validate") {
  CHECK(validate(SQ).valid());
  CHECK(validate(TRI).valid());
  CHECK(validate(catalog::hexagon()).valid());
  CHECK(validate(catalog::pentagon()).valid());

  const auto quadrant = validate(Polytope(2, {vec({1, 0}), vec({0, 1})}));
  REQUIRE(quadrant.failure == ValidationFailure::Unbounded);
  CHECK(quadrant.certificate == vec({-1, -1}));

  const auto open = validate(Polytope(2, {vec({1, 0}), vec({0, 1}), vec({1, 1})}));
  REQUIRE(open.failure == ValidationFailure::Unbounded);
  // the certificate is a recession direction of B
  for (const auto& xi : std::vector<RatCovector>{vec({1, 0}), vec({0, 1}), vec({1, 1})}) {
    CHECK(dot(xi, open.certificate) <= 0);
  }
  CHECK_FALSE(is_zero(open.certificate));

  const auto strip = validate(Polytope(2, {vec({1, 0}), vec({-1, 0}), vec({1, 1})}));
  CHECK(strip.failure == ValidationFailure::Unbounded);

  const auto red = validate(Polytope(2, {vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1}),
                                         vec({q(1, 2), q(1, 2)})}));
  REQUIRE(red.failure == ValidationFailure::Redundant);
  CHECK(red.facet == 4);
  CHECK_THROWS_AS(require_valid(Polytope(2, {vec({1, 0}), vec({0, 1}), vec({1, 1})})), DomainError);
}

TEST_CASE("norms") {
  CHECK(norm(SQ, vec({3, 1})) == 3);
  CHECK(norm(TRI, vec({-1, 0})) == q(1, 2));
  CHECK(norm(TRI, vec({0, 0})) == 0);

  CHECK(partial_norm(SQ, face({0, 2}), vec({-2, -3})) == -2);
  CHECK(partial_norm(SQ, SQ.all(), vec({3, 1})) == 3);
  CHECK(partial_norm(TRI, face({2}), vec({-2, -2})) == 2);
  CHECK_THROWS_AS(partial_norm(SQ, FaceSet{}, vec({1, 1})), std::invalid_argument);

  CHECK(asym_distance(SQ, vec({1, 0}), vec({0, 0})) == 1);
  CHECK(asym_distance(TRI, vec({0, 0}), vec({1, 0})) == q(1, 2));
  CHECK(asym_distance(TRI, vec({1, 0}), vec({0, 0})) == 1);
  CHECK(asym_distance(TRI, vec({q(2, 3), -5}), vec({q(2, 3), -5})) == 0);
}

TEST_CASE("metric constants") {
  const auto sq = metric_constants(SQ);
  CHECK(sq.alpha_squared == 2);
  CHECK(sq.beta_squared == 1);
  CHECK(sq.gamma_squared == 4);
  CHECK(sq.alpha == doctest::Approx(std::sqrt(2.0)));
  CHECK(sq.alpha >= std::sqrt(2.0));
  CHECK(sq.gamma == 2.0);

  CHECK(metric_constants(TRI).beta_squared == 1);
  CHECK(metric_constants(TRI).alpha_squared == 10);
}

TEST_CASE("vertices") {
  CHECK(vertices(SQ) == std::vector<RatVector>{vec({-1, -1}), vec({-1, 1}), vec({1, -1}), vec({1, 1})});
  CHECK(vertices(TRI) == std::vector<RatVector>{vec({-3, 1}), vec({1, -3}), vec({1, 1})});
  CHECK(vertices(catalog::segment()) == std::vector<RatVector>{vec({-1}), vec({1})});
  CHECK(vertices(catalog::cube(3)).size() == 8);
  CHECK(vertices(catalog::hexagon()).size() == 6);
}

TEST_CASE("strict face witnesses") {
  const auto v = strict_face_witness(SQ, face({0, 2}));
  REQUIRE(v);
  CHECK(*v == vec({1, 1}));
  CHECK_FALSE(strict_face_witness(SQ, face({0, 1})));
  CHECK_FALSE(strict_face_witness(SQ, SQ.all()));
}

TEST_CASE("norm properties on random polytopes") {
  oracle::Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const std::size_t d = 2 + i % 2;
    const Polytope p = oracle::random_polytope(rng, d, d + 2);
    const auto mc = metric_constants(p);
    for (int j = 0; j < 20; ++j) {
      const RatVector u = oracle::random_vector(rng, d);
      const RatVector v = oracle::random_vector(rng, d);
      const Rational s = oracle::random_vector(rng, 1, 5, 1)[0];
      CHECK(norm(p, u + v) <= norm(p, u) + norm(p, v));
      if (s >= 0) CHECK(norm(p, s * u) == s * norm(p, u));
      CHECK(squared_norm(u) <= mc.alpha_squared * norm(p, u) * norm(p, u));
      CHECK(norm(p, u) * norm(p, u) <= mc.beta_squared * squared_norm(u));
      if (!is_zero(u)) CHECK(norm(p, u) > 0);
    }
  }
}
