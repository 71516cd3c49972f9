#include "horo/oracle.hpp"

#include "horo/catalog.hpp"
#include "horo/lp.hpp"

#include <algorithm>
#include <map>

namespace horo::oracle {

std::vector<DualFace> faces_bruteforce(const Polytope& p) {
  const std::size_t n = p.num_facets();
  const std::size_t d = p.dim();
  if (n > kBruteForceFacetCap) {
    throw std::invalid_argument("faces_bruteforce: " + std::to_string(n) + " facets exceed the cap of " +
                                std::to_string(kBruteForceFacetCap));
  }
  std::vector<DualFace> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const FaceSet face(bits);
    // maximize s subject to xi_l(v) = 1 (l in L), xi_k(v) + s <= 1 (k not in L), s <= 1
    std::vector<Constraint> cons;
    for (std::size_t k = 0; k < n; ++k) {
      RatCovector row = p.facet(k);
      row.push_back(face.contains(k) ? 0 : 1);
      cons.push_back({std::move(row), face.contains(k) ? Relation::Equal : Relation::LessEq, 1});
    }
    RatCovector s = zero_vector(d + 1);
    s[d] = 1;
    cons.push_back({s, Relation::LessEq, 1});
    LPResult r = lp_maximize(s, cons);
    if (r.status != LPStatus::Optimal || r.optimum <= 0) continue;
    r.witness.resize(d);
    out.push_back({face, std::move(r.witness)});
  }
  std::sort(out.begin(), out.end(),
            [](const DualFace& a, const DualFace& b) { return face_order_less(a.members, b.members); });
  return out;
}

GridDifference horofunction_grid_compare(const Compactification& c, const Horofunction& h1,
                                         const Horofunction& h2, const Rational& radius,
                                         std::size_t steps) {
  if (steps < 2) throw std::invalid_argument("horofunction_grid_compare: steps must be >= 2");
  GridDifference best{Rational(0), zero_vector(c.dim())};
  for_each_grid_point(c.dim(), radius, steps, [&](const RatVector& u) {
    const Rational diff = abs(c.evaluate(h1, u) - c.evaluate(h2, u));
    if (diff > best.max_difference) best = {diff, u};
  });
  return best;
}

GridDifference ray_sample_compare(const Compactification& c, const RatVector& p,
                                  const RatVector& w, const Rational& t, const Rational& radius,
                                  std::size_t steps) {
  if (is_zero(w)) throw std::invalid_argument("ray_sample_compare: w = 0");
  if (t <= 0) throw std::invalid_argument("ray_sample_compare: t must be positive");
  const Polytope& poly = c.polytope();
  const Horofunction limit = c.ray_limit(p, w);
  const RatVector x = p + t * w;
  const Rational base = norm(poly, x);
  GridDifference best{Rational(0), zero_vector(c.dim())};
  for_each_grid_point(c.dim(), radius, steps, [&](const RatVector& u) {
    const Rational diff = abs(norm(poly, x - u) - base - c.evaluate(limit, u));
    if (diff > best.max_difference) best = {diff, u};
  });
  return best;
}

namespace {

std::vector<FaceSet> vertex_active_sets(const Polytope& p, const std::vector<RatVector>& verts) {
  std::vector<FaceSet> out;
  for (const auto& v : verts) {
    FaceSet a;
    const auto vals = p.values(v);
    for (std::size_t k = 0; k < vals.size(); ++k) {
      if (vals[k] == 1) a.insert(k);
    }
    out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::set<std::vector<std::size_t>> primal_faces(const Polytope& p) {
  const auto verts = vertices(p);
  const auto active = vertex_active_sets(p, verts);
  std::set<std::vector<std::size_t>> faces;
  std::vector<std::vector<std::size_t>> pending;
  for (std::size_t k = 0; k < p.num_facets(); ++k) {
    std::vector<std::size_t> facet;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (active[i].contains(k)) facet.push_back(i);
    }
    if (faces.insert(facet).second) pending.push_back(facet);
  }
  while (!pending.empty()) {
    const auto x = pending.back();
    pending.pop_back();
    const std::vector<std::vector<std::size_t>> snapshot(faces.begin(), faces.end());
    for (const auto& y : snapshot) {
      auto z = intersect(x, y);
      if (faces.insert(z).second) pending.push_back(std::move(z));
    }
  }
  faces.insert({});
  return faces;
}

Check check_poset_duality(const Polytope& p, const StrataPoset& poset) {
  const auto verts = vertices(p);
  const auto active = vertex_active_sets(p, verts);
  const auto faces = primal_faces(p);

  std::vector<std::vector<std::size_t>> image;
  for (const FaceSet node : poset.nodes) {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (node.is_subset_of(active[i])) f.push_back(i);
    }
    if (!faces.count(f)) return {false, "L=" + node.to_string() + " maps to a non-face of B"};
    image.push_back(std::move(f));
  }
  const std::set<std::vector<std::size_t>> distinct(image.begin(), image.end());
  if (distinct.size() != image.size()) return {false, "map to faces of B is not injective"};
  if (distinct != faces) {
    return {false, std::to_string(faces.size() - distinct.size()) + " faces of B have no stratum"};
  }
  for (std::size_t a = 0; a < image.size(); ++a) {
    for (std::size_t b = 0; b < image.size(); ++b) {
      const bool sub = poset.nodes[a].is_subset_of(poset.nodes[b]);
      const bool sup = std::includes(image[a].begin(), image[a].end(), image[b].begin(), image[b].end());
      if (sub != sup) {
        return {false, "order not reversed between " + poset.nodes[a].to_string() + " and " +
                           poset.nodes[b].to_string()};
      }
    }
  }
  return {true, std::to_string(image.size()) + " strata <-> " + std::to_string(faces.size()) +
                    " faces of B"};
}

RatVector random_vector(Rng& rng, std::size_t d, int numerator_bound, int max_denominator) {
  std::uniform_int_distribution<int> num(-numerator_bound, numerator_bound);
  std::uniform_int_distribution<int> den(1, max_denominator);
  RatVector v(d);
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return v;
}

RatVector random_nonzero_vector(Rng& rng, std::size_t d, int numerator_bound, int max_denominator) {
  while (true) {
    RatVector v = random_vector(rng, d, numerator_bound, max_denominator);
    if (!is_zero(v)) return v;
  }
}

Polytope random_polytope(Rng& rng, std::size_t d, std::size_t min_facets) {
  std::vector<RatCovector> facets;
  auto add_random = [&] {
    while (true) {
      RatCovector xi = random_nonzero_vector(rng, d, 4, 3);
      if (std::find(facets.begin(), facets.end(), xi) == facets.end()) {
        facets.push_back(std::move(xi));
        return;
      }
    }
  };
  while (facets.size() < min_facets) add_random();
  for (int guard = 0; guard < 10000; ++guard) {
    const Polytope candidate(d, facets, "random");
    const auto report = validate(candidate);
    switch (report.failure) {
      case ValidationFailure::None:
        if (facets.size() >= min_facets) return candidate;
        add_random();
        break;
      case ValidationFailure::Unbounded:
        add_random();
        break;
      case ValidationFailure::Redundant:
        facets.erase(facets.begin() + static_cast<std::ptrdiff_t>(report.facet));
        if (facets.empty()) add_random();
        break;
    }
  }
  throw std::runtime_error("random_polytope: no valid polytope generated");
}

RatVector random_positive_cone_point(Rng& rng, const Compactification& c, FaceSet face) {
  const Stratum& s = c.stratum(face);
  if (s.interior) return zero_vector(c.dim());
  RatVector v = s.witness;
  if (s.h.dim() > 0) {
    RatVector dir = zero_vector(c.dim());
    for (const auto& b : s.h.basis()) dir = dir + Rational(random_vector(rng, 1, 3, 2)[0]) * b;
    // Largest step keeping every gap (xi_l - xi_k)(v + delta dir) positive, halved.
    Rational delta = 1;
    for (const auto& g : s.cone_closure) {
      const Rational slope = dot(g, dir);
      if (slope < 0) delta = std::min(delta, dot(g, v) / (-2 * slope));
    }
    v = v + delta * dir;
  }
  std::uniform_int_distribution<int> scale_num(1, 6);
  std::uniform_int_distribution<int> scale_den(1, 3);
  return Rational(scale_num(rng), scale_den(rng)) * v;
}

std::vector<SelftestRow> selftest(std::uint64_t seed) {
  std::vector<SelftestRow> rows;
  for (const auto& poly : catalog::shipped()) {
    const auto fast = enumerate_dual_faces(poly);
    const auto slow = faces_bruteforce(poly);
    bool same = fast.size() == slow.size();
    for (std::size_t i = 0; same && i < fast.size(); ++i) same = fast[i].members == slow[i].members;
    rows.push_back({"faces[" + poly.name() + "]", same,
                    std::to_string(fast.size()) + " enumerated, " + std::to_string(slow.size()) +
                        " brute force"});
    const Check dual = check_poset_duality(poly, closure_poset(poly, fast));
    rows.push_back({"poset[" + poly.name() + "]", dual.ok, dual.detail});
  }

  Rng rng(seed);
  int ray_failures = 0;
  int partition_failures = 0;
  int stabilizer_failures = 0;
  const int instances = 20;
  for (int i = 0; i < instances; ++i) {
    const std::size_t d = 2 + static_cast<std::size_t>(i % 2);
    const Compactification c(random_polytope(rng, d, d + 2));
    const RatVector p = random_vector(rng, d);
    const RatVector w = random_nonzero_vector(rng, d);
    const Rational r = 2;
    // The cube grid [-r, r]^d sits inside the ball of radius r sqrt(d).
    Rational t = c.ray_agreement_threshold(p, w, r * sqrt_upper(Rational(d)));
    if (t <= 0) t = 1;
    if (ray_sample_compare(c, p, w, t, r, 4).max_difference != 0) ++ray_failures;

    const RatVector u = random_nonzero_vector(rng, d);
    const FaceSet k_u = active_face(c.polytope(), u).members;
    int hits = 0;
    for (const auto& f : c.dual_faces()) hits += in_positive_cone(c.stratum(f.members), u) ? 1 : 0;
    if (hits != 1 || !in_positive_cone(c.stratum(k_u), u)) ++partition_failures;

    const auto& face = c.dual_faces()[static_cast<std::size_t>(i) % c.dual_faces().size()];
    const Horofunction h = c.canonicalize(face.members, p);
    const Stratum& s = c.stratum(face.members);
    RatVector in_h = zero_vector(d);
    for (const auto& b : s.h.basis()) in_h = in_h + Rational(i + 1) * b;
    if (!c.equal(c.translate(h, in_h), h)) ++stabilizer_failures;
  }
  rows.push_back({"ray-agreement[random]", ray_failures == 0,
                  std::to_string(ray_failures) + "/" + std::to_string(instances) + " failures"});
  rows.push_back({"partition[random]", partition_failures == 0,
                  std::to_string(partition_failures) + "/" + std::to_string(instances) + " failures"});
  rows.push_back({"stabilizer[random]", stabilizer_failures == 0,
                  std::to_string(stabilizer_failures) + "/" + std::to_string(instances) + " failures"});
  return rows;
}

}  // namespace horo::oracle
