#include "horo/cli.hpp"

#include "horo/io.hpp"
#include "horo/moment.hpp"
#include "horo/oracle.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace horo::cli {

namespace {

using io::json;

// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
json read_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    try {
      return json::parse(arg);
    } catch (const json::exception& e) {
      throw ParseError("malformed JSON '" + arg + "': " + e.what());
    }
  }
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot open '" + arg + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("malformed JSON in '" + arg + "': " + e.what());
  }
}

RatVector read_point(const Compactification& c, const std::string& text, const char* flag) {
  RatVector v = parse_vector(text);
  if (v.size() != c.dim()) {
    throw ParseError(std::string(flag) + " '" + text + "' has " + std::to_string(v.size()) +
                     " entries, expected " + std::to_string(c.dim()));
  }
  return v;
}

struct Options {
  std::string polytope;
  std::string u, v, p, w, q, face, horo, a, b, points, stratum, eps;
  std::size_t window = 10;
  double range = 3;
  std::size_t steps = 10;
  std::uint64_t seed = 1;
  bool dot = false;
  bool as_json = false;
};

Compactification load(const Options& o) { return Compactification(io::read_polytope(o.polytope)); }

int cmd_validate(const Options& o, std::ostream& out) {
  const Polytope poly = io::read_polytope(o.polytope);
  const ValidationReport r = validate(poly);
  json j = {{"valid", r.valid()}};
  if (!r.valid()) {
    j["reason"] = r.message;
    out << j.dump() << "\n";
    throw DomainError(r.message);
  }
  const MetricConstants mc = metric_constants(poly);
  j["alpha"] = mc.alpha;
  j["beta"] = mc.beta;
  j["gamma"] = mc.gamma;
  out << j.dump() << "\n";
  return kOk;
}

int cmd_norm(const Options& o, std::ostream& out) {
  const Compactification c = load(o);
  RatVector u = read_point(c, o.u, "--u");
  if (!o.v.empty()) u = u - read_point(c, o.v, "--v");
  const FaceSet face = o.face.empty() ? c.interior_label() : io::parse_label(c, o.face);
  out << json{{"value", io::to_json(partial_norm(c.polytope(), face, u))}}.dump() << "\n";
  return kOk;
}

int cmd_faces(const Options& o, std::ostream& out) {
  const Compactification c = load(o);
  out << io::faces_to_json(c.dual_faces()).dump() << "\n";
  return kOk;
}

int cmd_stratum_info(const Options& o, std::ostream& out) {
  const Compactification c = load(o);
  out << io::stratum_to_json(c, c.stratum(io::parse_label(c, o.face))).dump() << "\n";
  return kOk;
}

int cmd_horo_eval(const Options& o, std::ostream& out) {
  const Compactification c = load(o);
  const Horofunction h = io::horofunction_from_json(c, read_json_arg(o.horo));
  out << json{{"value", io::to_json(c.evaluate(h, read_point(c, o.u, "--u")))}}.dump() << "\n";
  return kOk;
}

int cmd_horo_eq(const Options& o, std::ostream& out) {
  const Compactification c = load(o);
  const Horofunction h1 = io::horofunction_from_json(c, read_json_arg(o.a));
  const Horofunction h2 = io::horofunction_from_json(c, read_json_arg(o.b));
  out << json{{"equal", c.equal(h1, h2)}}.dump() << "\n";
  return kOk;
}

int cmd_ray_limit(const Options& o, std::ostream& out) {
  const Compactification c = load(o);
  const Horofunction h = c.ray_limit(read_point(c, o.p, "--p"), read_point(c, o.w, "--w"));
  out << io::horofunction_to_json(c, h).dump() << "\n";
  return kOk;
}

int cmd_seq_classify(const Options& o, std::ostream& out) {
  const Compactification c = load(o);
  const json pts = read_json_arg(o.points);
  if (!pts.is_array()) throw ParseError("--points must hold a JSON array of points");
  std::vector<RatVector> points;
  for (const auto& p : pts) {
    RatVector v = io::vector_from_json(p);
    if (v.size() != c.dim()) throw ParseError("point " + p.dump() + " has the wrong dimension");
    points.push_back(std::move(v));
  }
  if (o.window > points.size() || o.window < 2) {
    throw ParseError("--window " + std::to_string(o.window) + " must be in [2, " +
                     std::to_string(points.size()) + "]");
  }
  const auto h = c.classify_tail(points, o.window);
  out << (h ? io::horofunction_to_json(c, *h) : json(nullptr)).dump() << "\n";
  return kOk;
}

int cmd_nbhd_member(const Options& o, std::ostream& out) {
  const Compactification c = load(o);
  const Neighborhood n{io::parse_label(c, o.face), parse_rational(o.eps), read_point(c, o.q, "--q")};
  if (n.epsilon <= 0) throw DomainError("--eps must be positive");
  const Horofunction h = io::horofunction_from_json(c, read_json_arg(o.horo));
  out << json{{"member", c.neighborhood_contains(n, h)}}.dump() << "\n";
  return kOk;
}

int cmd_moment(const Options& o, std::ostream& out) {
  const Compactification c = load(o);
  const Horofunction h = io::horofunction_from_json(c, read_json_arg(o.horo));
  const MomentPoint m = moment(c, h);
  json coords = json::array();
  for (Eigen::Index i = 0; i < m.coords.size(); ++i) coords.push_back(m.coords(i));
  out << json{{"coords", coords}, {"face", io::label_to_json(c, m.face_hint)}}.dump() << "\n";
  return kOk;
}

int cmd_moment_grid(const Options& o, std::ostream& out) {
  const Compactification c = load(o);
  if (o.steps < 1) throw ParseError("--steps must be at least 1");
  io::write_moment_grid(out, c, io::parse_label(c, o.stratum), o.range, o.steps);
  return kOk;
}

int cmd_poset(const Options& o, std::ostream& out) {
  const Compactification c = load(o);
  const StrataPoset poset = closure_poset(c.polytope(), c.dual_faces());
  if (o.dot) {
    io::write_dot(out, poset);
  } else {
    out << io::poset_to_json(poset).dump() << "\n";
  }
  return kOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  const auto rows = oracle::selftest(o.seed);
  bool all = true;
  for (const auto& r : rows) {
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(28) << r.name << r.detail
        << "\n";
    all = all && r.passed;
  }
  out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? kOk : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Horofunction compactification of polyhedral asymmetric norms", "horo"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&action, &o, &out, fn] { action = [&o, &out, fn] { return fn(o, out); }; });
    return s;
  };
  auto with_polytope = [&](CLI::App* s) {
    s->add_option("--polytope", o.polytope, "polytope JSON file")->required();
    return s;
  };

  with_polytope(sub("validate", "check boundedness and irredundancy", cmd_validate));

  auto* norm_cmd = with_polytope(sub("norm", "evaluate nu(u), nu(u - v) or nu_L(u)", cmd_norm));
  norm_cmd->add_option("--u", o.u, "point, comma-separated rationals")->required();
  norm_cmd->add_option("--v", o.v, "subtract this point (asymmetric distance)");
  norm_cmd->add_option("--face", o.face, "partial norm over these facet indices");

  auto* faces_cmd = with_polytope(sub("faces", "list dual faces with witnesses", cmd_faces));
  faces_cmd->add_flag("--json", o.as_json, "JSON output (the default)");

  auto* info = with_polytope(sub("stratum-info", "H_L, W_L and cone data of a stratum", cmd_stratum_info));
  info->add_option("--face", o.face, "dual face indices or 'interior'")->required();

  auto* eval = with_polytope(sub("horo-eval", "evaluate a horofunction", cmd_horo_eval));
  eval->add_option("--horo", o.horo, "horofunction JSON or file")->required();
  eval->add_option("--u", o.u, "point")->required();

  auto* eq = with_polytope(sub("horo-eq", "compare two horofunctions", cmd_horo_eq));
  eq->add_option("--a", o.a, "horofunction JSON or file")->required();
  eq->add_option("--b", o.b, "horofunction JSON or file")->required();

  auto* ray = with_polytope(sub("ray-limit", "limit of the ray p + t w", cmd_ray_limit));
  ray->add_option("--p", o.p, "base point")->required();
  ray->add_option("--w", o.w, "direction")->required();

  auto* seq = with_polytope(sub("seq-classify", "limit of a sampled sequence", cmd_seq_classify));
  seq->add_option("--points", o.points, "JSON array of points, inline or file")->required();
  seq->add_option("--window", o.window, "number of trailing samples used");

  auto* nb = with_polytope(sub("nbhd-member", "membership in U(L, eps, q)", cmd_nbhd_member));
  nb->add_option("--face", o.face, "dual face indices or 'interior'")->required();
  nb->add_option("--eps", o.eps, "positive rational radius")->required();
  nb->add_option("--q", o.q, "offset point")->required();
  nb->add_option("--horo", o.horo, "horofunction JSON or file")->required();

  auto* mom = with_polytope(sub("moment", "image under the moment map", cmd_moment));
  mom->add_option("--horo", o.horo, "horofunction JSON or file")->required();

  auto* grid = with_polytope(sub("moment-grid", "CSV of c_L over a grid", cmd_moment_grid));
  grid->add_option("--stratum", o.stratum, "dual face indices or 'interior'")->required();
  grid->add_option("--range", o.range, "grid half-width R");
  grid->add_option("--steps", o.steps, "grid subdivisions per axis");

  auto* poset = with_polytope(sub("poset", "closure order of the strata", cmd_poset));
  poset->add_flag("--dot", o.dot, "emit Graphviz DOT");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force cross-validation");
  oracle_cmd->require_subcommand(1);
  CLI::App* selftest = oracle_cmd->add_subcommand("selftest", "run the validation battery");
  selftest->add_option("--seed", o.seed, "seed of the randomized battery");
  selftest->callback([&] { action = [&] { return cmd_selftest(o, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (!action) {
    err << "error: no command\n";
    return kInputError;
  }

  try {
    return action();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace horo::cli
