#pragma once

// File formats: polytope JSON, horofunction JSON, face listings, the strata
// poset as DOT, and moment-map grids as CSV.

#include "horo/horofunction.hpp"

#include "json.hpp"

#include <iosfwd>

namespace horo::io {

using json = nlohmann::ordered_json;

/// Rationals are written as "p" or "p/q". Integer JSON numbers are accepted on
/// input as well.
json to_json(const Rational& r);
json to_json(const RatVector& v);
Rational rational_from_json(const json& j);
RatVector vector_from_json(const json& j);

/// {"name": str, "dim": int, "facets": [[rational-string, ...], ...]}
json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);
/// Throws ParseError for unreadable files or malformed JSON.
Polytope read_polytope(const std::string& path);

/// {"stratum": "interior" | [int, ...], "rep": [rational-string, ...]}
json horofunction_to_json(const Compactification& c, const Horofunction& h);
/// Boundary representatives are canonicalized, so any p of p + H_L is accepted.
Horofunction horofunction_from_json(const Compactification& c, const json& j);

/// "interior" or comma-separated facet indices such as "0,2".
FaceSet parse_label(const Compactification& c, std::string_view text);
/// "interior" or [i, j, ...]
json label_to_json(const Compactification& c, FaceSet label);

/// [{"members": [...], "witness": [...]}, ...]
json faces_to_json(const std::vector<DualFace>& faces);

json stratum_to_json(const Compactification& c, const Stratum& s);

/// The covering relation as a DOT digraph. Node labels are "L={i,j,...}" and
/// "interior"; an edge a -> b means V_b is a maximal stratum in the closure of V_a.
void write_dot(std::ostream& out, const StrataPoset& poset);
json poset_to_json(const StrataPoset& poset);

/// Rows p_1,...,p_d,c_1,...,c_d of c_L(p) on {-R + 2 R i / steps}^d.
void write_moment_grid(std::ostream& out, const Compactification& c, FaceSet label, double range,
                       std::size_t steps);

}  // namespace horo::io
