#include "horo/strata.hpp"

#include <algorithm>
#include <set>

namespace horo {

std::vector<DualFace> enumerate_dual_faces(const Polytope& p) {
  std::set<std::uint64_t> seen;
  std::vector<FaceSet> pending;
  for (const auto& v : vertices(p)) {
    FaceSet active;
    const auto vals = p.values(v);
    for (std::size_t k = 0; k < vals.size(); ++k) {
      if (vals[k] == 1) active.insert(k);
    }
    if (seen.insert(active.bits()).second) pending.push_back(active);
  }
  // Close under pairwise intersection.
  std::vector<FaceSet> closed;
  while (!pending.empty()) {
    const FaceSet x = pending.back();
    pending.pop_back();
    for (const FaceSet y : closed) {
      const FaceSet z = x & y;
      if (!z.empty() && seen.insert(z.bits()).second) pending.push_back(z);
    }
    closed.push_back(x);
  }
  std::sort(closed.begin(), closed.end(), face_order_less);

  std::vector<DualFace> out;
  out.reserve(closed.size());
  for (const FaceSet f : closed) {
    auto witness = strict_face_witness(p, f);
    if (!witness) continue;
    out.push_back({f, std::move(*witness)});
  }
  return out;
}

Stratum build_stratum(const Polytope& p, FaceSet label) {
  const std::size_t d = p.dim();
  Stratum s;
  s.label = label;
  if (label == p.all()) {
    s.interior = true;
    s.h = Subspace::zero(d);
    s.w = Subspace::full(d);
    s.eta = zero_vector(d);
    return s;
  }
  if (label.empty() || !label.is_subset_of(p.all())) {
    throw DomainError("L=" + label.to_string() + " is not a dual face");
  }
  auto witness = strict_face_witness(p, label);
  if (!witness) throw DomainError("L=" + label.to_string() + " is not a dual face");
  s.witness = std::move(*witness);

  const auto members = label.members();
  const RatCovector& anchor = p.facet(members.front());
  RatMatrix eqs;
  s.eta = zero_vector(d);
  for (auto l : members) {
    s.eta = s.eta + p.facet(l);
    if (l != members.front()) eqs.push_back(p.facet(l) - anchor);
  }
  s.h = Subspace::kernel(eqs, d);
  const Subspace eta_perp = Subspace::kernel({s.eta}, d);
  s.w = orthogonal_complement_within(s.h.intersect(eta_perp), eta_perp);
  for (std::size_t k = 0; k < p.num_facets(); ++k) {
    if (!label.contains(k)) s.cone_closure.push_back(anchor - p.facet(k));
  }
  return s;
}

DualFace active_face(const Polytope& p, const RatVector& w) {
  if (is_zero(w)) throw std::invalid_argument("active_face: w = 0");
  const auto vals = p.values(w);
  const Rational top = *std::max_element(vals.begin(), vals.end());
  FaceSet face;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    if (vals[k] == top) face.insert(k);
  }
  return {face, Rational(1) / top * w};
}

bool in_cone_closure(const Stratum& s, const RatVector& w) {
  if (!s.h.contains(w)) return false;
  for (const auto& c : s.cone_closure) {
    if (dot(c, w) < 0) return false;
  }
  return true;
}

bool in_positive_cone(const Stratum& s, const RatVector& w) {
  if (s.interior) return is_zero(w);
  if (!s.h.contains(w)) return false;
  for (const auto& c : s.cone_closure) {
    if (dot(c, w) <= 0) return false;
  }
  return true;
}

bool in_negative_cone(const Polytope& p, FaceSet face, const RatVector& v) {
  if (face.empty()) throw std::invalid_argument("in_negative_cone: empty index set");
  for (auto l : face.members()) {
    if (dot(p.facet(l), v) > 0) return false;
  }
  return true;
}

bool chamber_cone(const Polytope& p, std::size_t k, FaceSet face, const RatVector& v) {
  if (!face.contains(k)) {
    throw std::invalid_argument("chamber_cone: index " + std::to_string(k) + " not in " +
                                face.to_string());
  }
  const Rational top = dot(p.facet(k), v);
  for (auto l : face.members()) {
    if (l != k && dot(p.facet(l), v) >= top) return false;
  }
  return true;
}

std::vector<FaceSet> StrataPoset::closure(FaceSet label) const {
  std::vector<FaceSet> out;
  for (const FaceSet n : nodes) {
    if (n.is_subset_of(label)) out.push_back(n);
  }
  return out;
}

StrataPoset closure_poset(const Polytope& p) { return closure_poset(p, enumerate_dual_faces(p)); }

StrataPoset closure_poset(const Polytope& p, const std::vector<DualFace>& faces) {
  StrataPoset poset;
  poset.interior = p.all();
  poset.nodes.push_back(p.all());
  for (const auto& f : faces) poset.nodes.push_back(f.members);
  const auto& nodes = poset.nodes;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      if (a == b || !nodes[b].is_subset_of(nodes[a])) continue;
      bool covering = true;
      for (std::size_t c = 0; c < nodes.size() && covering; ++c) {
        if (c == a || c == b) continue;
        if (nodes[b].is_subset_of(nodes[c]) && nodes[c].is_subset_of(nodes[a])) covering = false;
      }
      if (covering) poset.covers.emplace_back(a, b);
    }
  }
  return poset;
}

}  // namespace horo
