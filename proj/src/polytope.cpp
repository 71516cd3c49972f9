#include "horo/polytope.hpp"

#include "horo/linalg.hpp"
#include "horo/lp.hpp"

#include <algorithm>
#include <functional>

namespace horo {

Polytope::Polytope(std::size_t dim, std::vector<RatCovector> facets, std::string name)
    : dim_(dim), facets_(std::move(facets)), name_(std::move(name)) {
  if (dim_ == 0) throw DomainError("polytope dimension must be positive");
  if (facets_.empty()) throw DomainError("empty facet list");
  if (facets_.size() > kMaxFacets) {
    throw DomainError("too many facets (" + std::to_string(facets_.size()) + " > 64)");
  }
  std::string key = std::to_string(dim_);
  for (std::size_t k = 0; k < facets_.size(); ++k) {
    require_same_dim(facets_[k].size(), dim_, "facet");
    if (is_zero(facets_[k])) throw DomainError("facet " + std::to_string(k) + " is the zero covector");
    for (std::size_t j = 0; j < k; ++j) {
      if (facets_[j] == facets_[k]) {
        throw DomainError("facets " + std::to_string(j) + " and " + std::to_string(k) + " are equal");
      }
    }
    key += ";" + to_string(facets_[k]);
  }
  fingerprint_ = std::hash<std::string>{}(key);
}

std::vector<Rational> Polytope::values(const RatVector& u) const {
  require_same_dim(u.size(), dim_, "Polytope::values");
  std::vector<Rational> out;
  out.reserve(facets_.size());
  for (const auto& xi : facets_) out.push_back(dot(xi, u));
  return out;
}

ValidationReport validate(const Polytope& p) {
  const std::size_t d = p.dim();
  const std::size_t n = p.num_facets();
  // Facets not spanning V^dual leave a line inside B.
  const Subspace lineality = Subspace::kernel(p.facets(), d);
  if (lineality.dim() > 0) {
    RatVector dir = lineality.basis().front();
    return {ValidationFailure::Unbounded, "unbounded: recession direction " + to_string(dir), dir,
            0};
  }

  // Recession cone {u : xi_k(u) <= 0} is {0} iff max -sum_k xi_k(u) over
  // the box -1 <= xi_k(u) <= 0 is zero.
  std::vector<Constraint> cons;
  RatCovector objective = zero_vector(d);
  for (const auto& xi : p.facets()) {
    cons.push_back({xi, Relation::LessEq, 0});
    cons.push_back({-xi, Relation::LessEq, 1});
    objective = objective - xi;
  }
  const LPResult rec = lp_maximize(objective, cons);
  if (rec.status == LPStatus::Optimal && rec.optimum > 0) {
    return {ValidationFailure::Unbounded,
            "unbounded: recession direction " + to_string(rec.witness), rec.witness, 0};
  }

  for (std::size_t k = 0; k < n; ++k) {
    FaceSet single;
    single.insert(k);
    if (!strict_face_witness(p, single)) {
      return {ValidationFailure::Redundant,
              "redundant: facet " + std::to_string(k) + " does not define a facet of B", {}, k};
    }
  }
  return {};
}

void require_valid(const Polytope& p) {
  auto report = validate(p);
  if (!report.valid()) throw DomainError("invalid polytope: " + report.message);
}

Rational norm(const Polytope& p, const RatVector& u) {
  return partial_norm(p, p.all(), u);
}

Rational partial_norm(const Polytope& p, FaceSet face, const RatVector& u) {
  if (face.empty()) throw std::invalid_argument("partial_norm: empty index set");
  require_same_dim(u.size(), p.dim(), "partial_norm");
  std::optional<Rational> best;
  for (auto k : face.members()) {
    Rational v = dot(p.facet(k), u);
    if (!best || v > *best) best = std::move(v);
  }
  return *best;
}

Rational asym_distance(const Polytope& p, const RatVector& u, const RatVector& v) {
  return norm(p, u - v);
}

std::optional<RatVector> strict_face_witness(const Polytope& p, FaceSet face) {
  const std::size_t d = p.dim();
  // Variables (v, s).
  auto extend = [d](const RatCovector& xi, Rational s_coeff) {
    RatCovector row = xi;
    row.resize(d + 1);
    row[d] = std::move(s_coeff);
    return row;
  };
  std::vector<Constraint> cons;
  for (std::size_t k = 0; k < p.num_facets(); ++k) {
    if (face.contains(k)) {
      cons.push_back({extend(p.facet(k), 0), Relation::Equal, 1});
    } else {
      cons.push_back({extend(p.facet(k), 1), Relation::LessEq, 1});
    }
  }
  RatCovector s_only = zero_vector(d + 1);
  s_only[d] = 1;
  cons.push_back({s_only, Relation::LessEq, 1});
  const LPResult r = lp_maximize(s_only, cons);
  if (r.status != LPStatus::Optimal || r.optimum <= 0) return std::nullopt;
  RatVector v = r.witness;
  v.resize(d);
  return v;
}

namespace {

template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<RatVector> vertices(const Polytope& p) {
  const std::size_t d = p.dim();
  std::vector<RatVector> out;
  for_each_combination(p.num_facets(), d, [&](const std::vector<std::size_t>& idx) {
    RatMatrix a;
    for (auto k : idx) a.push_back(p.facet(k));
    auto sol = solve_linear_system(a, RatVector(d, Rational(1)), d);
    if (!sol || sol->kernel.dim() != 0) return;
    for (const auto& xi : p.facets()) {
      if (dot(xi, sol->particular) > 1) return;
    }
    out.push_back(std::move(sol->particular));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MetricConstants metric_constants(const Polytope& p) {
  MetricConstants mc;
  for (const auto& v : vertices(p)) mc.alpha_squared = std::max(mc.alpha_squared, squared_norm(v));
  for (std::size_t k = 0; k < p.num_facets(); ++k) {
    mc.beta_squared = std::max(mc.beta_squared, squared_norm(p.facet(k)));
    for (std::size_t l = k + 1; l < p.num_facets(); ++l) {
      mc.gamma_squared = std::max(mc.gamma_squared, squared_norm(p.facet(k) - p.facet(l)));
    }
  }
  mc.alpha = to_double(sqrt_upper(mc.alpha_squared));
  mc.beta = to_double(sqrt_upper(mc.beta_squared));
  mc.gamma = to_double(sqrt_upper(mc.gamma_squared));
  return mc;
}

}  // namespace horo
