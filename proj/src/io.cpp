#include "horo/io.hpp"

#include "horo/moment.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace horo::io {

json to_json(const Rational& r) { return to_string(r); }

json to_json(const RatVector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational string, got " + j.dump());
}

RatVector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  RatVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

json polytope_to_json(const Polytope& p) {
  json facets = json::array();
  for (const auto& xi : p.facets()) facets.push_back(to_json(xi));
  return {{"name", p.name()}, {"dim", p.dim()}, {"facets", facets}};
}

Polytope polytope_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("polytope JSON must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0) {
    throw ParseError("polytope JSON: missing or invalid 'dim'");
  }
  if (!j.contains("facets") || !j["facets"].is_array()) {
    throw ParseError("polytope JSON: missing 'facets' array");
  }
  const auto d = j["dim"].get<std::size_t>();
  std::vector<RatCovector> facets;
  for (const auto& f : j["facets"]) {
    RatCovector xi = vector_from_json(f);
    if (xi.size() != d) {
      throw ParseError("polytope JSON: facet " + f.dump() + " has length " +
                       std::to_string(xi.size()) + ", expected " + std::to_string(d));
    }
    facets.push_back(std::move(xi));
  }
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  return Polytope(d, std::move(facets), std::move(name));
}

Polytope read_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open polytope file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
  return polytope_from_json(j);
}

json label_to_json(const Compactification& c, FaceSet label) {
  if (label == c.interior_label()) return "interior";
  return label.members();
}

FaceSet parse_label(const Compactification& c, std::string_view text) {
  if (text == "interior") return c.interior_label();
  FaceSet face;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string token(rest.substr(0, comma));
    std::size_t used = 0;
    unsigned long idx = 0;
    try {
      idx = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size() || token.front() == '-') {
      throw ParseError("malformed facet index '" + token + "'");
    }
    if (idx >= c.polytope().num_facets()) {
      throw DomainError("facet index " + token + " out of range");
    }
    face.insert(idx);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return face;
}

json horofunction_to_json(const Compactification& c, const Horofunction& h) {
  return {{"stratum", label_to_json(c, h.stratum)}, {"rep", to_json(h.rep)}};
}

Horofunction horofunction_from_json(const Compactification& c, const json& j) {
  if (!j.is_object() || !j.contains("stratum") || !j.contains("rep")) {
    throw ParseError("horofunction JSON needs 'stratum' and 'rep'");
  }
  const RatVector rep = vector_from_json(j["rep"]);
  if (rep.size() != c.dim()) {
    throw ParseError("horofunction JSON: rep has length " + std::to_string(rep.size()) +
                     ", expected " + std::to_string(c.dim()));
  }
  const json& s = j["stratum"];
  if (s.is_string()) {
    if (s.get<std::string>() != "interior") throw ParseError("unknown stratum " + s.dump());
    return c.interior(rep);
  }
  if (!s.is_array()) throw ParseError("stratum must be \"interior\" or an index array");
  FaceSet face;
  for (const auto& k : s) {
    if (!k.is_number_unsigned() || k.get<std::size_t>() >= c.polytope().num_facets()) {
      throw ParseError("bad facet index " + k.dump() + " in stratum");
    }
    face.insert(k.get<std::size_t>());
  }
  if (face == c.interior_label()) {
    throw DomainError("stratum lists every facet; use \"interior\"");
  }
  return c.canonicalize(face, rep);
}

json faces_to_json(const std::vector<DualFace>& faces) {
  json arr = json::array();
  for (const auto& f : faces) arr.push_back({{"members", f.members.members()}, {"witness", to_json(f.witness)}});
  return arr;
}

json stratum_to_json(const Compactification& c, const Stratum& s) {
  auto basis = [](const Subspace& sub) {
    json arr = json::array();
    for (const auto& b : sub.basis()) arr.push_back(to_json(b));
    return arr;
  };
  json cone = json::array();
  for (const auto& g : s.cone_closure) cone.push_back(to_json(g));
  return {{"stratum", label_to_json(c, s.label)},
          {"dim_H", s.h.dim()},
          {"H", basis(s.h)},
          {"dim_W", s.w.dim()},
          {"W", basis(s.w)},
          {"eta", to_json(s.eta)},
          {"cone_closure", cone},
          {"witness", to_json(s.witness)}};
}

namespace {

std::string node_name(const StrataPoset& poset, FaceSet node) {
  return node == poset.interior ? "interior" : "L=" + node.to_string();
}

}  // namespace

void write_dot(std::ostream& out, const StrataPoset& poset) {
  out << "digraph strata {\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << node_name(poset, poset.nodes[i]) << "\"];\n";
  }
  for (const auto& [a, b] : poset.covers) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
}

json poset_to_json(const StrataPoset& poset) {
  json nodes = json::array();
  for (const FaceSet n : poset.nodes) {
    nodes.push_back(n == poset.interior ? json("interior") : json(n.members()));
  }
  json covers = json::array();
  for (const auto& [a, b] : poset.covers) covers.push_back({a, b});
  return {{"nodes", nodes}, {"covers", covers}};
}

void write_moment_grid(std::ostream& out, const Compactification& c, FaceSet label, double range,
                       std::size_t steps) {
  c.stratum(label);
  if (steps < 1) throw std::invalid_argument("moment-grid: steps must be >= 1");
  const std::size_t d = c.dim();
  std::ostringstream buf;
  buf << std::setprecision(17);
  std::vector<std::size_t> idx(d, 0);
  Eigen::VectorXd x(static_cast<Eigen::Index>(d));
  while (true) {
    for (std::size_t i = 0; i < d; ++i) {
      x(static_cast<Eigen::Index>(i)) =
          -range + 2 * range * static_cast<double>(idx[i]) / static_cast<double>(steps);
    }
    const MomentPoint m = moment_at(c.polytope(), label, x);
    for (std::size_t i = 0; i < d; ++i) buf << x(static_cast<Eigen::Index>(i)) << ",";
    for (std::size_t i = 0; i < d; ++i) {
      buf << m.coords(static_cast<Eigen::Index>(i)) << (i + 1 < d ? "," : "\n");
    }
    std::size_t i = 0;
    while (i < d && idx[i] == steps) idx[i++] = 0;
    if (i == d) break;
    ++idx[i];
  }
  out << buf.str();
}

}  // namespace horo::io
