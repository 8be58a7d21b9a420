#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "pog/configurations.hpp"
#include "pog/generators.hpp"
#include "pog/oracles.hpp"

using namespace pog;

namespace {

std::vector<ConfigId> all_ids() {
  std::vector<ConfigId> out;
  for (const auto& p : catalog()) out.push_back(p.id);
  return out;
}

}  // namespace

TEST_CASE("catalog") {
  const auto& c = catalog();
  CHECK(c.size() == 10);
  for (const auto& p : c) {
    CAPTURE(to_string(p.id));
    CHECK(config_id_from_string(to_string(p.id)) == p.id);
    CHECK(p.roles.size() == p.degrees.size());
    for (auto [a, b] : p.edges) {
      CHECK(a != b);
      CHECK(a < static_cast<int>(p.roles.size()));
      CHECK(b < static_cast<int>(p.roles.size()));
    }
    CHECK(&pattern(p.id) == &p);
  }
  CHECK(coloring_patterns() == std::vector<ConfigId>{ConfigId::G3, ConfigId::G6, ConfigId::G12, ConfigId::G13,
                                                     ConfigId::G4, ConfigId::G5, ConfigId::G16, ConfigId::G17});
  CHECK_FALSE(config_id_from_string("G7").has_value());
}

TEST_CASE("pattern examples") {
  SUBCASE("G1 in C5") {
    auto m = match_pattern(cycle_graph(5), ConfigId::G1);
    REQUIRE(m);
    CHECK(cycle_graph(5).has_edge(m->role("u"), m->role("v")));
  }
  SUBCASE("G2 in P_1") {
    auto p1 = gen_pn(1);
    auto m = match_pattern(p1.graph, ConfigId::G2);
    REQUIRE(m);
    CHECK(match_holds(p1.graph, *m));
    CHECK(p1.graph.degree(m->role("u")) == 2);
    CHECK(p1.graph.degree(m->role("w")) == 3);
  }
  SUBCASE("G3 in K2,3") {
    Graph g = complete_bipartite(2, 3);
    auto m = match_pattern(g, ConfigId::G3);
    REQUIRE(m);
    CHECK(g.degree(m->role("u")) == 2);
    CHECK(g.degree(m->role("v")) == 2);
    CHECK(match_holds(g, *m));
  }
}

TEST_CASE("find_configuration examples") {
  SUBCASE("K4 gives G6 with the x0 y0 edge present") {
    Diagram d{complete_graph(4), {{{0, 1, 2, 3}, true}}};
    auto m = find_configuration(d, all_ids());
    REQUIRE(m);
    CHECK(m->id == ConfigId::G6);
    CHECK(d.graph.has_edge(m->role("x0"), m->role("y0")));
  }
  SUBCASE("C5 gives G1") {
    Diagram d{cycle_graph(5), {{{0, 1, 2, 3, 4}, true}}};
    auto m = find_configuration(d, all_ids());
    REQUIRE(m);
    CHECK(m->id == ConfigId::G1);
  }
  SUBCASE("Q_3 has no G3") { CHECK_FALSE(find_configuration(gen_qn(3), {ConfigId::G3}).has_value()); }
  SUBCASE("invalid diagram") {
    Diagram bad{cycle_graph(4), {{{0, 1, 2}, true}}};
    CHECK_THROWS_AS(find_configuration(bad, all_ids()), InvalidInput);
  }
  SUBCASE("G3 reports whether xy can be drawn") {
    auto d = recognize(complete_bipartite(2, 3));
    REQUIRE(d);
    auto m = find_configuration(*d, {ConfigId::G3});
    REQUIRE(m);
    CHECK(m->xy_addable.has_value());
  }
}

TEST_CASE("matches hold in the host and are injective") {
  for (const auto& e : po_corpus(6))
    for (ConfigId id : all_ids()) {
      auto m = match_pattern(e.graph, id);
      if (!m) continue;
      CHECK(match_holds(e.graph, *m));
      std::set<Vertex> used(m->assignment.begin(), m->assignment.end());
      CHECK(used.size() == m->assignment.size());
    }
}

TEST_CASE("the eight coloring patterns cover every dense corpus diagram with max degree at least four") {
  int dense = 0;
  for (const auto& e : po_corpus(7)) {
    const Graph& g = e.graph;
    const int delta = g.max_degree();
    if (delta < 4 || g.min_degree() < 2) continue;
    bool ok = true;
    for (const Edge& f : g.edges()) ok = ok && g.degree(f.u) + g.degree(f.v) >= delta + 2;
    if (!ok) continue;
    ++dense;
    CHECK(find_configuration(e.diagram, coloring_patterns()).has_value());
  }
  CHECK(dense > 0);
}

TEST_CASE("the full catalog on min-degree-two corpus diagrams") {
  int total = 0, gaps = 0;
  for (const auto& e : po_corpus(7)) {
    if (e.graph.order() < 3 || e.graph.min_degree() < 2) continue;
    ++total;
    if (!find_configuration(e.diagram, all_ids())) ++gaps;
  }
  MESSAGE("catalog gaps: " << gaps << " of " << total);
  CHECK(total > 0);
  CHECK(gaps * 10 < total);
}
