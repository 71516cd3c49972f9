#pragma once

// The generalized moment map c : V^ -> B^dual. On the stratum with face L,
// c_L(p) = sum_{k in L} exp(xi_k(p)) xi_k / sum_{k in L} exp(xi_k(p)), the
// gradient of the log-partition function f_L(p) = log sum_{k in L} exp(xi_k(p)).
// Everything here is double precision with a max-shift before exponentiating.

#include "horo/horofunction.hpp"

#include <Eigen/Dense>

namespace horo {

struct MomentPoint {
  Eigen::VectorXd coords;   // covector in V^dual
  FaceSet face_hint;        // L whose open face should contain coords
  Eigen::VectorXd weights;  // softmax weights over the members of L, in order
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Facet covectors as rows.
Eigen::MatrixXd facet_matrix(const Polytope& p);

Eigen::VectorXd to_eigen(const RatVector& v);

/// c_L(p) with its softmax weights.
MomentPoint moment_at(const Polytope& p, FaceSet face, const Eigen::VectorXd& x);

/// c(h): c_K(p) for an interior point, c_L(rep) on the stratum of L.
MomentPoint moment(const Compactification& c, const Horofunction& h);

/// f_L(p) = log b_L(p).
double log_partition(const Polytope& p, FaceSet face, const Eigen::VectorXd& x);

/// Hessian of f_L at p: the covariance of {xi_k : k in L} under the softmax
/// weights. Its kernel is H_L.
Eigen::MatrixXd hessian(const Polytope& p, FaceSet face, const Eigen::VectorXd& x);

struct InvertOptions {
  double tol = 1e-12;
  int max_iterations = 200;
};

/// p with ||c_K(p) - target|| <= tol, by damped Newton on the convex function
/// f_K(p) - <target, p>. Throws NonConvergence after max_iterations.
Eigen::VectorXd invert_interior(const Polytope& p, const Eigen::VectorXd& target,
                                const InvertOptions& opts = {});

/// ||c_K(p + t w) - c(ray_limit(p, w))|| for each t.
std::vector<double> boundary_continuity_check(const Compactification& c, const RatVector& p,
                                              const RatVector& w, const std::vector<double>& ts);

}  // namespace horo
