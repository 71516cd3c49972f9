#include "horo/horofunction.hpp"

#include "horo/lp.hpp"

#include <algorithm>
#include <cmath>

namespace horo {

Compactification::Compactification(Polytope p) : polytope_(std::move(p)) {
  require_valid(polytope_);
  faces_ = enumerate_dual_faces(polytope_);
  strata_.emplace(polytope_.all().bits(), build_stratum(polytope_, polytope_.all()));
  for (const auto& f : faces_) strata_.emplace(f.members.bits(), build_stratum(polytope_, f.members));
  constants_ = metric_constants(polytope_);
}

bool Compactification::is_dual_face(FaceSet label) const {
  return label != polytope_.all() && strata_.count(label.bits()) != 0;
}

const Stratum& Compactification::stratum(FaceSet label) const {
  auto it = strata_.find(label.bits());
  if (it == strata_.end()) throw DomainError("L=" + label.to_string() + " is not a dual face");
  return it->second;
}

void Compactification::check_context(const Horofunction& h) const {
  if (h.context != polytope_.fingerprint()) {
    throw ContextMismatch("horofunction belongs to a different polytope");
  }
  require_same_dim(h.rep.size(), dim(), "horofunction");
}

Horofunction Compactification::interior(RatVector p) const {
  require_same_dim(p.size(), dim(), "interior point");
  return {polytope_.all(), true, std::move(p), polytope_.fingerprint()};
}

Horofunction Compactification::canonicalize(FaceSet label, const RatVector& p) const {
  require_same_dim(p.size(), dim(), "canonicalize");
  const Stratum& s = stratum(label);
  if (s.interior) return interior(p);
  return {label, false, decompose(p, s.h, s.w).second, polytope_.fingerprint()};
}

Rational Compactification::evaluate(const Horofunction& h, const RatVector& u) const {
  check_context(h);
  require_same_dim(u.size(), dim(), "evaluate");
  return partial_norm(polytope_, h.stratum, h.rep - u) - partial_norm(polytope_, h.stratum, h.rep);
}

bool Compactification::equal(const Horofunction& h1, const Horofunction& h2) const {
  check_context(h1);
  check_context(h2);
  return h1.stratum == h2.stratum && h1.rep == h2.rep;
}

Horofunction Compactification::translate(const Horofunction& h, const RatVector& w) const {
  check_context(h);
  return canonicalize(h.stratum, h.rep + w);
}

Horofunction Compactification::ray_limit(const RatVector& p, const RatVector& w) const {
  require_same_dim(w.size(), dim(), "ray_limit");
  if (is_zero(w)) return interior(p);
  return canonicalize(active_face(polytope_, w).members, p);
}

Rational Compactification::ray_agreement_threshold(const RatVector& p, const RatVector& w,
                                                   const Rational& r) const {
  require_same_dim(p.size(), dim(), "ray_agreement_threshold");
  if (is_zero(w)) throw std::invalid_argument("ray_agreement_threshold: w = 0");
  if (r < 0) throw std::invalid_argument("ray_agreement_threshold: negative radius");
  const FaceSet face = active_face(polytope_, w).members;
  const RatCovector& anchor = polytope_.facet(face.first());
  // For k outside L, (xi_l - xi_k)(p + t w - u) >= t gap_k + (xi_l - xi_k)(p)
  // - ||xi_l - xi_k|| r must be >= 0 so that nu and nu_L agree.
  Rational t0 = 0;
  for (std::size_t k = 0; k < polytope_.num_facets(); ++k) {
    if (face.contains(k)) continue;
    const RatCovector diff = anchor - polytope_.facet(k);
    const Rational gap = dot(diff, w);
    const Rational need = (sqrt_upper(squared_norm(diff)) * r - dot(diff, p)) / gap;
    t0 = std::max(t0, need);
  }
  return t0;
}

std::optional<Horofunction> Compactification::classify_tail(const std::vector<RatVector>& points,
                                                            std::size_t window,
                                                            const TailTolerances& tol) const {
  if (window < 2) throw std::invalid_argument("classify_tail: window must be at least 2");
  if (window > points.size()) {
    throw std::invalid_argument("classify_tail: window " + std::to_string(window) +
                                " larger than the sample (" + std::to_string(points.size()) + ")");
  }
  const std::size_t m = polytope_.num_facets();
  const std::size_t first = points.size() - window;

  // gaps[n][k] = nu(p_n) - xi_k(p_n)
  std::vector<std::vector<double>> gaps;
  double tie = 0;
  for (std::size_t n = first; n < points.size(); ++n) {
    const auto vals = polytope_.values(points[n]);
    const Rational top = *std::max_element(vals.begin(), vals.end());
    double scale = 0;
    std::vector<double> g(m);
    for (std::size_t k = 0; k < m; ++k) {
      g[k] = to_double(top - vals[k]);
      scale = std::max(scale, std::abs(to_double(vals[k])));
    }
    tie = std::max(tie, tol.tie_relative * (1 + scale));
    gaps.push_back(std::move(g));
  }

  FaceSet face;
  for (std::size_t k = 0; k < m; ++k) {
    const double last = gaps.back()[k];
    bool stable = true;
    for (const auto& g : gaps) stable = stable && std::abs(g[k] - last) <= tie;
    if (stable) {
      face.insert(k);
      continue;
    }
    for (std::size_t i = 1; i < gaps.size(); ++i) {
      if (!(gaps[i][k] > gaps[i - 1][k])) return std::nullopt;
    }
  }
  if (face.empty() || strata_.count(face.bits()) == 0) return std::nullopt;

  const Stratum& s = stratum(face);
  auto project = [&](const RatVector& x) {
    return s.interior ? x : decompose(x, s.h, s.w).second;
  };
  const std::vector<double> target = to_double(project(points.back()));
  for (std::size_t n = first; n + 1 < points.size(); ++n) {
    const std::vector<double> q = to_double(project(points[n]));
    double dist2 = 0;
    for (std::size_t i = 0; i < q.size(); ++i) dist2 += (q[i] - target[i]) * (q[i] - target[i]);
    if (std::sqrt(dist2) > tol.cauchy) return std::nullopt;
  }
  return canonicalize(face, points.back());
}

Rational Compactification::squared_cone_distance(FaceSet label, FaceSet outer,
                                                 const RatVector& x) const {
  require_same_dim(x.size(), dim(), "squared_cone_distance");
  if (!label.is_subset_of(outer)) {
    throw std::invalid_argument("squared_cone_distance: " + outer.to_string() +
                                " does not contain " + label.to_string());
  }
  const Stratum& cone = stratum(label);
  const Subspace& shift = stratum(outer).h;

  // y lies in cl(H_L^+) + S iff y - s is in the closed cone for some s in S.
  auto in_sum = [&](const RatVector& y) {
    if (shift.dim() == 0) return in_cone_closure(cone, y);
    const auto& basis = shift.basis();
    std::vector<Constraint> cons;
    for (const auto& c : cone.cone_closure) {
      RatCovector row(basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i) row[i] = dot(c, basis[i]);
      cons.push_back({std::move(row), Relation::LessEq, dot(c, y)});
    }
    return lp_maximize(zero_vector(basis.size()), cons).status != LPStatus::Infeasible;
  };

  // The nearest point lies in the relative interior of some face
  // cl(H_L''^+) + S, L'' containing L; project onto each face's span and keep
  // the closest candidate that is feasible.
  std::optional<Rational> best;
  for (const auto& [bits, s] : strata_) {
    if (!label.is_subset_of(s.label)) continue;
    const RatVector y = orthogonal_projection(x, s.h + shift);
    if (!in_sum(y)) continue;
    Rational d2 = squared_norm(x - y);
    if (!best || d2 < *best) best = std::move(d2);
  }
  return *best;
}

bool Compactification::neighborhood_contains(const Neighborhood& n, const Horofunction& h) const {
  check_context(h);
  if (n.epsilon <= 0) throw std::invalid_argument("neighborhood: epsilon must be positive");
  require_same_dim(n.q.size(), dim(), "neighborhood");
  const Rational eps2 = n.epsilon * n.epsilon;
  if (n.label == polytope_.all()) {
    return h.interior && squared_norm(h.rep - n.q) < eps2;
  }
  stratum(n.label);
  if (!n.label.is_subset_of(h.stratum)) return false;
  return squared_cone_distance(n.label, h.stratum, h.rep - n.q) < eps2;
}

}  // namespace horo
