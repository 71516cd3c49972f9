#include "doctest.h"
#include "support.hpp"

#include "horo/catalog.hpp"
#include "horo/cli.hpp"
#include "horo/io.hpp"

#include <sstream>

using namespace horo;
using testing::face;
using testing::q;
using testing::vec;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HORO_DATA_DIR) + "/" + name + ".json"; }

const std::string SQ = data("square");

}  // namespace

TEST_CASE("polytope files match the catalog") {
  CHECK(io::read_polytope(SQ).facets() == catalog::square().facets());
  CHECK(io::read_polytope(data("cube3")).facets() == catalog::cube(3).facets());
  CHECK(io::read_polytope(data("triangle")).facets() == catalog::triangle().facets());
  CHECK(io::read_polytope(data("hexagon")).facets() == catalog::hexagon().facets());
  CHECK(io::read_polytope(data("pentagon")).facets() == catalog::pentagon().facets());
}

TEST_CASE("io round trips") {
  const Polytope p = catalog::pentagon();
  const Polytope back = io::polytope_from_json(io::json::parse(io::polytope_to_json(p).dump()));
  CHECK(back.facets() == p.facets());
  CHECK(back.name() == p.name());

  const Compactification c(catalog::square());
  for (const auto& h : {c.interior(vec({q(1, 3), -2})), c.canonicalize(face({0, 2}), vec({1, 0})),
                        c.canonicalize(face({3}), vec({0, 0}))}) {
    const auto j = io::horofunction_to_json(c, h);
    CHECK(io::horofunction_from_json(c, io::json::parse(j.dump())) == h);
  }
  CHECK(io::horofunction_to_json(c, c.interior(vec({q(1, 3), -2}))).dump() ==
        R"({"stratum":"interior","rep":["1/3","-2"]})");

  CHECK(io::parse_label(c, "interior") == c.interior_label());
  CHECK(io::parse_label(c, "0,2") == face({0, 2}));
  CHECK_THROWS_AS(io::parse_label(c, "0,x"), ParseError);
  CHECK_THROWS_AS(io::parse_label(c, "9"), DomainError);
  CHECK_THROWS_AS(io::read_polytope("/nonexistent/p.json"), ParseError);
  CHECK_THROWS_AS(io::polytope_from_json(io::json::parse(R"({"dim":2,"facets":[["1"]]})")), ParseError);
  CHECK_THROWS_AS(io::polytope_from_json(io::json::parse(R"({"facets":[]})")), ParseError);
}

TEST_CASE("cli: faces, ray-limit, validate") {
  const auto faces = run({"faces", "--polytope", SQ});
  CHECK(faces.code == 0);
  CHECK(io::json::parse(faces.out).size() == 8);

  const auto ray = run({"ray-limit", "--polytope", SQ, "--p", "0,0", "--w", "1,1"});
  CHECK(ray.code == 0);
  CHECK(ray.out == "{\"stratum\":[0,2],\"rep\":[\"0\",\"0\"]}\n");

  const auto bad = run({"validate", "--polytope", data("unbounded")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("unbounded") != std::string::npos);

  const auto ok = run({"validate", "--polytope", SQ});
  CHECK(ok.code == 0);
  CHECK(io::json::parse(ok.out)["valid"] == true);
}

TEST_CASE("cli: error statuses name the offending token") {
  const auto missing = run({"faces", "--polytope", "/nonexistent.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("/nonexistent.json") != std::string::npos);

  const auto rat = run({"norm", "--polytope", SQ, "--u", "1,2/0"});
  CHECK(rat.code == 2);
  CHECK(rat.err.find("2/0") != std::string::npos);

  const auto flag = run({"faces", "--polytope", SQ, "--bogus"});
  CHECK(flag.code == 2);
  CHECK(flag.err.find("--bogus") != std::string::npos);

  const auto dim = run({"norm", "--polytope", SQ, "--u", "1,2,3"});
  CHECK(dim.code == 2);

  const auto notface = run({"stratum-info", "--polytope", SQ, "--face", "0,1"});
  CHECK(notface.code == 1);

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("cli: evaluation commands") {
  const auto tri = data("triangle");
  CHECK(run({"norm", "--polytope", tri, "--u=-1,0"}).out == "{\"value\":\"1/2\"}\n");
  CHECK(run({"norm", "--polytope", tri, "--u", "0,0", "--v", "1,0"}).out == "{\"value\":\"1/2\"}\n");
  CHECK(run({"norm", "--polytope", SQ, "--u=-2,-3", "--face", "0,2"}).out == "{\"value\":\"-2\"}\n");

  const std::string h = R"({"stratum":[0,2],"rep":["1","0"]})";
  CHECK(run({"horo-eval", "--polytope", SQ, "--horo", h, "--u", "1,0"}).out == "{\"value\":\"-1\"}\n");
  CHECK(run({"horo-eq", "--polytope", SQ, "--a", h, "--b", R"({"stratum":[0,2],"rep":["0","-1"]})"}).out ==
        "{\"equal\":true}\n");
  CHECK(run({"horo-eq", "--polytope", SQ, "--a", h, "--b", R"({"stratum":[1,3],"rep":["0","0"]})"}).out ==
        "{\"equal\":false}\n");

  const auto seq = run({"seq-classify", "--polytope", SQ, "--points",
                        "[[\"1\",\"2\"],[\"2\",\"3\"],[\"3\",\"4\"],[\"4\",\"5\"],[\"5\",\"6\"]]", "--window", "4"});
  CHECK(seq.out == "{\"stratum\":[0,2],\"rep\":[\"-1/2\",\"1/2\"]}\n");

  const std::string inner = R"({"stratum":"interior","rep":["12","11"]})";
  CHECK(run({"nbhd-member", "--polytope", SQ, "--face", "0,2", "--eps", "1", "--q", "10,10", "--horo", inner})
            .out == "{\"member\":true}\n");
  CHECK(run({"nbhd-member", "--polytope", SQ, "--face", "0,2", "--eps", "1/2", "--q", "10,10", "--horo", inner})
            .out == "{\"member\":false}\n");
  CHECK(run({"nbhd-member", "--polytope", SQ, "--face", "0,2", "--eps", "0", "--q", "10,10", "--horo", inner})
            .code == 1);

  const auto info = io::json::parse(run({"stratum-info", "--polytope", SQ, "--face", "0,2"}).out);
  CHECK(info["dim_H"] == 1);
  CHECK(info["W"][0] == io::json::parse(R"(["1","-1"])"));
}

TEST_CASE("cli: moment, grid and poset") {
  const auto m = io::json::parse(
      run({"moment", "--polytope", SQ, "--horo", R"({"stratum":[0,2],"rep":["0","0"]})"}).out);
  CHECK(m["coords"][0].get<double>() == doctest::Approx(0.5));
  CHECK(m["face"] == io::json::parse("[0,2]"));

  const auto grid = run({"moment-grid", "--polytope", SQ, "--stratum", "interior", "--range", "2", "--steps", "4"});
  CHECK(grid.code == 0);
  CHECK(std::count(grid.out.begin(), grid.out.end(), '\n') == 25);

  const auto dot = run({"poset", "--polytope", SQ, "--dot"});
  CHECK(dot.out.rfind("digraph strata {", 0) == 0);
  CHECK(dot.out.find("label=\"interior\"") != std::string::npos);
  CHECK(dot.out.find("label=\"L={0,2}\"") != std::string::npos);
  CHECK(std::count(dot.out.begin(), dot.out.end(), '>') == 12);

  const auto poset = io::json::parse(run({"poset", "--polytope", data("cube3")}).out);
  CHECK(poset["nodes"].size() == 27);
}

TEST_CASE("cli: output is deterministic and reparses") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"faces", "--polytope", data("hexagon")},
           {"stratum-info", "--polytope", data("pentagon"), "--face", "interior"},
           {"poset", "--polytope", data("triangle")},
           {"ray-limit", "--polytope", data("cube3"), "--p", "1/2,0,3", "--w", "1,1,0"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(io::json::parse(a.out).dump() + "\n" == a.out);
  }
  const auto ray = run({"ray-limit", "--polytope", data("cube3"), "--p", "1/2,0,3", "--w", "1,1,0"});
  const auto again = run({"horo-eq", "--polytope", data("cube3"), "--a", ray.out, "--b",
                          R"({"stratum":[0,2],"rep":["1/2","0","3"]})"});
  CHECK(again.out == "{\"equal\":true}\n");
}

TEST_CASE("cli: oracle selftest") {
  const auto r = run({"oracle", "selftest", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
