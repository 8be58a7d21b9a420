#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "pog/colorings.hpp"
#include "pog/generators.hpp"
#include "pog/io.hpp"

using namespace pog;
using json = nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string generated(const std::string& family, int n) {
  auto r = run({"generate", "--family", family, "--n", std::to_string(n)});
  REQUIRE(r.code == 0);
  return r.out;
}

}  // namespace

TEST_CASE("generate then linear-arboricity on Q_3") {
  auto r = run({"linear-arboricity"}, generated("qn", 3));
  CHECK(r.code == 0);
  auto c = parse_coloring(r.out);
  CHECK(c.k == 3);
  CHECK(verify_edge_coloring(gen_qn(3).graph, c).valid);
}

TEST_CASE("recognize") {
  auto k5 = run({"recognize"}, to_json(complete_graph(5)));
  CHECK(k5.code == 2);
  CHECK(k5.err.find("not pseudo-outerplanar") != std::string::npos);
  auto k4 = run({"recognize"}, to_json(complete_graph(4)));
  CHECK(k4.code == 0);
  CHECK(validate(parse_diagram(k4.out)).valid);
}

TEST_CASE("decompose") {
  auto fig1 = generated("fig1", 1);
  auto r = run({"decompose", "--mode", "two-forests-matching"}, fig1);
  CHECK(r.code == 0);
  auto dec = parse_decomposition(r.out);
  CHECK(dec.parts.size() == 3);
  CHECK(verify_decomposition(gen_fig1().graph, dec).valid);
  for (std::string mode : {"linear-forest", "star-forest"}) {
    auto c = run({"decompose", "--mode", mode}, fig1);
    CHECK(c.code == 0);
    CHECK(verify_decomposition(gen_fig1().graph, parse_decomposition(c.out)).valid);
  }
  CHECK(run({"decompose", "--mode", "three-matchings"}, fig1).code == 1);
}

TEST_CASE("validate") {
  CHECK(run({"validate"}, generated("mat12", 12)).code == 0);
  Diagram bad{cycle_graph(4), {{{0, 1, 2}, true}}};
  auto r = run({"validate"}, to_json(bad));
  CHECK(r.code == 2);
  CHECK_FALSE(json::parse(r.out)["valid"].get<bool>());
}

TEST_CASE("color-edges") {
  auto r = run({"color-edges", "--trace"}, generated("qn", 2));
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["k"] == 4);
  CHECK(j.contains("trace"));
  auto p1 = run({"color-edges"}, generated("pn", 1));
  CHECK(p1.code == 0);
  CHECK(parse_coloring(p1.out).k == 4);
  auto bare = run({"color-edges"}, to_json(cycle_graph(5)));
  CHECK(bare.code == 0);
  CHECK(parse_coloring(bare.out).k == 3);
}

TEST_CASE("hamiltonize and maximalize") {
  Diagram c4{cycle_graph(4), {{{0, 1, 2, 3}, true}}};
  auto m = run({"maximalize"}, to_json(c4));
  CHECK(m.code == 0);
  CHECK(parse_diagram(m.out).graph == complete_graph(4));
  CHECK(json::parse(m.out)["added"].size() == 2);

  Diagram crossed{cycle_graph(4), {{{0, 2, 1, 3}, false}}};
  auto h = run({"hamiltonize", "--cycle", "0,1,2,3"}, to_json(crossed));
  CHECK(h.code == 0);
  CHECK(crossing_pairs(parse_diagram(h.out)).empty());
  auto q = run({"hamiltonize"}, to_json(crossed));
  CHECK(q.code == 0);
}

TEST_CASE("find-config") {
  auto r = run({"find-config", "--allowed", "all"}, to_json(cycle_graph(5)));
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["id"] == "G1");
  CHECK(run({"find-config", "--allowed", "G3"}, generated("qn", 3)).code == 2);
  CHECK(run({"find-config", "--allowed", "G99"}, generated("qn", 3)).code == 1);
}

TEST_CASE("oracle") {
  auto ci = run({"oracle", "--op", "chromatic-index"}, generated("pn", 1));
  CHECK(ci.code == 0);
  CHECK(json::parse(ci.out)["value"] == 4);
  auto m = run({"oracle", "--op", "removal", "--kind", "matching"}, generated("mat12", 12));
  CHECK(m.code == 2);
  CHECK(json::parse(m.out)["outcome"] == "none");
  auto fp = run({"oracle", "--op", "forest-partition", "--k", "3"}, generated("gn", 6));
  CHECK(fp.code == 0);
  auto tight = run({"oracle", "--op", "chromatic-index", "--budget-nodes", "2"}, generated("qn", 3));
  CHECK(tight.code == 1);
  CHECK(json::parse(tight.out)["outcome"] == "over-budget");
}

TEST_CASE("corpus") {
  auto r = run({"corpus", "--n", "6", "--check", "all", "--threads", "2"});
  CHECK(r.code == 0);
  std::istringstream rows(r.out);
  std::string line;
  int n = 0;
  while (std::getline(rows, line)) {
    CHECK(json::parse(line)["ok"] == true);
    ++n;
  }
  CHECK(n == 108);
  auto again = run({"corpus", "--n", "5", "--check", "coloring", "--threads", "3"});
  CHECK(again.out == run({"corpus", "--n", "5", "--check", "coloring", "--threads", "1"}).out);
}

TEST_CASE("render") {
  Diagram k4{complete_graph(4), {{{0, 1, 2, 3}, true}}};
  auto svg = run({"render", "--format", "svg"}, to_json(k4));
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") == 0);
  CHECK(run({"render", "--format", "png"}, to_json(k4)).code == 1);
}

TEST_CASE("rejected input") {
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"generate", "--family", "qn", "--n", "3", "--bogus"}).code == 1);
  CHECK(run({"generate", "--family", "nope"}).code == 1);
  CHECK(run({"recognize"}, "{").code == 1);
  CHECK(run({}).code == 1);
}
