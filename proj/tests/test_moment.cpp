#include "doctest.h"
#include "support.hpp"

#include "horo/catalog.hpp"
#include "horo/moment.hpp"
#include "horo/oracle.hpp"

#include <cmath>

using namespace horo;
using testing::face;
using testing::q;
using testing::vec;

namespace {

const Compactification& sq() {
  static const Compactification c(catalog::square());
  return c;
}

const Compactification& tri() {
  static const Compactification c(catalog::triangle());
  return c;
}

Eigen::VectorXd v2(double a, double b) { return Eigen::Vector2d(a, b); }

}  // namespace

TEST_CASE("moment map at symmetric points") {
  const auto& c = sq();
  CHECK(moment(c, c.interior(vec({0, 0}))).coords.norm() < 1e-15);
  const MomentPoint m = moment(c, c.canonicalize(face({0, 2}), vec({0, 0})));
  CHECK((m.coords - v2(0.5, 0.5)).norm() < 1e-15);
  CHECK(m.face_hint == face({0, 2}));
  CHECK(m.weights.size() == 2);
  CHECK((moment(tri(), tri().interior(vec({0, 0}))).coords - v2(1.0 / 6, 1.0 / 6)).norm() < 1e-15);
  // a point stratum maps to its vertex of the dual polytope
  CHECK((moment(c, c.canonicalize(face({3}), vec({0, 0}))).coords - v2(0, -1)).norm() == 0);
}

TEST_CASE("log partition and Hessian") {
  const Polytope& p = sq().polytope();
  CHECK(log_partition(p, p.all(), v2(0, 0)) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(log_partition(tri().polytope(), face({0, 1}), v2(0, 0)) == doctest::Approx(std::log(2.0)));
  CHECK(log_partition(p, face({2}), v2(3, -7)) == doctest::Approx(-7));
  CHECK(log_partition(p, p.all(), v2(800, 0)) == doctest::Approx(800));  // no overflow

  const Eigen::MatrixXd hk = hessian(p, p.all(), v2(0, 0));
  CHECK((hk - 0.5 * Eigen::Matrix2d::Identity()).norm() < 1e-15);
  const Eigen::MatrixXd h02 = hessian(p, face({0, 2}), v2(0.3, -1.1));
  const Eigen::Vector2d diag(1, 1);
  CHECK(std::abs(diag.dot(h02 * diag)) < 1e-15);
  CHECK(hessian(p, face({1}), v2(1, 2)).norm() == 0);
  CHECK_THROWS_AS(moment_at(p, FaceSet{}, v2(0, 0)), std::invalid_argument);
}

TEST_CASE("interior inversion") {
  const Polytope& p = sq().polytope();
  CHECK(invert_interior(p, v2(0, 0)).norm() < 1e-12);
  const Eigen::VectorXd x = invert_interior(p, v2(0.3, 0));
  CHECK((moment_at(p, p.all(), x).coords - v2(0.3, 0)).norm() <= 1e-10);
  // (2, 0) is outside the dual polytope, so no preimage exists
  CHECK_THROWS_AS(invert_interior(p, v2(2, 0)), NonConvergence);
}

TEST_CASE("boundary continuity") {
  const auto& c = sq();
  const RatVector o = vec({0, 0});
  CHECK(boundary_continuity_check(c, o, vec({1, 1}), {40})[0] <= 1e-15);
  CHECK(boundary_continuity_check(c, o, vec({1, 0}), {40})[0] <= 1e-15);
  CHECK(boundary_continuity_check(c, o, vec({1, 1}), {0})[0] ==
        doctest::Approx(std::sqrt(0.5)));
  const auto decay = boundary_continuity_check(c, o, vec({1, 1}), {1, 5, 10, 20});
  for (std::size_t i = 1; i < decay.size(); ++i) CHECK(decay[i] < decay[i - 1]);
  CHECK_THROWS_AS(boundary_continuity_check(c, o, vec({0, 0}), {1}), std::invalid_argument);
}

TEST_CASE("moment map properties on random polytopes") {
  oracle::Rng rng(23);
  std::uniform_real_distribution<double> box(-3, 3);
  for (int i = 0; i < 10; ++i) {
    const std::size_t d = 2 + i % 2;
    const Compactification c(oracle::random_polytope(rng, d, d + 2));
    const Polytope& p = c.polytope();
    auto rand_point = [&] {
      Eigen::VectorXd x(static_cast<Eigen::Index>(d));
      for (Eigen::Index j = 0; j < x.size(); ++j) x(j) = box(rng);
      return x;
    };
    std::vector<FaceSet> labels{p.all()};
    for (const auto& f : c.dual_faces()) labels.push_back(f.members);
    for (const FaceSet label : labels) {
      const Stratum& s = c.stratum(label);
      for (int j = 0; j < 10; ++j) {
        const Eigen::VectorXd x = rand_point();
        const Eigen::VectorXd y = rand_point();
        const Eigen::VectorXd cx = moment_at(p, label, x).coords;
        // gradient of the log partition, by central differences
        for (Eigen::Index k = 0; k < x.size(); ++k) {
          Eigen::VectorXd e = Eigen::VectorXd::Zero(x.size());
          e(k) = 1e-6;
          const double g = (log_partition(p, label, x + e) - log_partition(p, label, x - e)) / 2e-6;
          CHECK(std::abs(g - cx(k)) < 1e-6);
        }
        // weights form a probability vector
        CHECK(std::abs(moment_at(p, label, x).weights.sum() - 1) < 1e-14);
        // H_L invariance
        for (const auto& b : s.h.basis()) {
          const Eigen::VectorXd shifted = x + 0.7 * to_eigen(b);
          CHECK((moment_at(p, label, shifted).coords - cx).norm() <= 1e-12);
        }
        // monotone on W_L directions
        const Eigen::VectorXd diff = y - x;
        const double step = (moment_at(p, label, y).coords - cx).dot(diff);
        CHECK(step >= 0);
      }
    }
  }
}
