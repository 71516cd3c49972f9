#include "horo/moment.hpp"

#include <cmath>

namespace horo {

Eigen::MatrixXd facet_matrix(const Polytope& p) {
  Eigen::MatrixXd m(p.num_facets(), p.dim());
  for (std::size_t k = 0; k < p.num_facets(); ++k) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = to_double(p.facet(k)[i]);
    }
  }
  return m;
}

Eigen::VectorXd to_eigen(const RatVector& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = to_double(v[i]);
  return out;
}

namespace {

// Rows of the facet matrix restricted to L.
Eigen::MatrixXd face_rows(const Polytope& p, FaceSet face) {
  if (face.empty()) throw std::invalid_argument("moment: empty index set");
  const auto members = face.members();
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(members.size()), p.dim());
  const Eigen::MatrixXd all = facet_matrix(p);
  for (std::size_t i = 0; i < members.size(); ++i) {
    rows.row(static_cast<Eigen::Index>(i)) = all.row(static_cast<Eigen::Index>(members[i]));
  }
  return rows;
}

Eigen::VectorXd softmax(const Eigen::VectorXd& values) {
  Eigen::VectorXd w = (values.array() - values.maxCoeff()).exp();
  return w / w.sum();
}

void check_dim(const Polytope& p, const Eigen::VectorXd& x) {
  require_same_dim(static_cast<std::size_t>(x.size()), p.dim(), "moment");
}

}  // namespace

MomentPoint moment_at(const Polytope& p, FaceSet face, const Eigen::VectorXd& x) {
  check_dim(p, x);
  const Eigen::MatrixXd rows = face_rows(p, face);
  Eigen::VectorXd w = softmax(rows * x);
  return {rows.transpose() * w, face, std::move(w)};
}

MomentPoint moment(const Compactification& c, const Horofunction& h) {
  c.evaluate(h, zero_vector(c.dim()));  // context and dimension check
  return moment_at(c.polytope(), h.stratum, to_eigen(h.rep));
}

double log_partition(const Polytope& p, FaceSet face, const Eigen::VectorXd& x) {
  check_dim(p, x);
  const Eigen::VectorXd values = face_rows(p, face) * x;
  const double top = values.maxCoeff();
  return top + std::log((values.array() - top).exp().sum());
}

Eigen::MatrixXd hessian(const Polytope& p, FaceSet face, const Eigen::VectorXd& x) {
  check_dim(p, x);
  const Eigen::MatrixXd rows = face_rows(p, face);
  const Eigen::VectorXd w = softmax(rows * x);
  const Eigen::VectorXd mean = rows.transpose() * w;
  Eigen::MatrixXd second = rows.transpose() * w.asDiagonal() * rows;
  return second - mean * mean.transpose();
}

Eigen::VectorXd invert_interior(const Polytope& p, const Eigen::VectorXd& target,
                                const InvertOptions& opts) {
  check_dim(p, target);
  const FaceSet all = p.all();
  auto objective = [&](const Eigen::VectorXd& x) { return log_partition(p, all, x) - target.dot(x); };
  auto gradient = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    return moment_at(p, all, x).coords - target;
  };

  Eigen::VectorXd x = Eigen::VectorXd::Zero(target.size());
  for (int it = 0; it < opts.max_iterations; ++it) {
    const Eigen::VectorXd g = gradient(x);
    if (g.norm() <= opts.tol) return x;
    Eigen::MatrixXd h = hessian(p, all, x);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    if (lo <= 0 || hi / lo > 1e12) h += 1e-12 * Eigen::MatrixXd::Identity(h.rows(), h.cols());
    const Eigen::VectorXd step = -h.ldlt().solve(g);

    // Backtracking on the objective; near the optimum roundoff hides the
    // decrease, so a smaller gradient is accepted as progress too.
    const double f0 = objective(x);
    const double slope = g.dot(step);
    double alpha = 1.0;
    Eigen::VectorXd next = x + step;
    for (int k = 0; k < 60; ++k) {
      next = x + alpha * step;
      if (objective(next) <= f0 + 1e-4 * alpha * slope || gradient(next).norm() < g.norm()) break;
      alpha *= 0.5;
    }
    x = next;
  }
  if (gradient(x).norm() <= opts.tol) return x;
  throw NonConvergence("invert_interior: no convergence after " +
                       std::to_string(opts.max_iterations) +
                       " iterations (target too close to the boundary of B^dual?)");
}

std::vector<double> boundary_continuity_check(const Compactification& c, const RatVector& p,
                                              const RatVector& w, const std::vector<double>& ts) {
  if (is_zero(w)) throw std::invalid_argument("boundary_continuity_check: w = 0");
  const Eigen::VectorXd limit = moment(c, c.ray_limit(p, w)).coords;
  const Eigen::VectorXd base = to_eigen(p);
  const Eigen::VectorXd dir = to_eigen(w);
  std::vector<double> out;
  out.reserve(ts.size());
  for (double t : ts) {
    out.push_back((moment_at(c.polytope(), c.interior_label(), base + t * dir).coords - limit).norm());
  }
  return out;
}

}  // namespace horo
