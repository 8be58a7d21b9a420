#include "doctest.h"

#include <algorithm>
#include <vector>

#include "pog/diagram.hpp"
#include "pog/generators.hpp"
#include "pog/oracles.hpp"

using namespace pog;

namespace {

Diagram k4_diagram() { return Diagram{complete_graph(4), {{{0, 1, 2, 3}, true}}}; }

bool cycle_is_boundary(const Diagram& d, const std::vector<Vertex>& c) {
  for (const auto& b : d.blocks) {
    if (b.order.size() != c.size()) continue;
    std::vector<Edge> want, got;
    for (std::size_t i = 0; i < c.size(); ++i) {
      want.emplace_back(c[i], c[(i + 1) % c.size()]);
      got.emplace_back(b.order[i], b.order[(i + 1) % c.size()]);
    }
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want == got) return true;
  }
  return false;
}

// All hamiltonian cycles through vertex 0, each listed once per direction.
void hamiltonian_cycles(const Graph& g, std::vector<Vertex>& path, std::vector<char>& used,
                        std::vector<std::vector<Vertex>>& out) {
  const int n = g.order();
  if (static_cast<int>(path.size()) == n) {
    if (g.has_edge(path.back(), path.front())) out.push_back(path);
    return;
  }
  for (Vertex w : g.neighbors(path.back()))
    if (!used[w]) {
      used[w] = 1;
      path.push_back(w);
      hamiltonian_cycles(g, path, used, out);
      path.pop_back();
      used[w] = 0;
    }
}

}  // namespace

TEST_CASE("validate") {
  SUBCASE("K4 has one crossing") {
    auto d = k4_diagram();
    CHECK(validate(d).valid);
    auto cp = crossing_pairs(d);
    REQUIRE(cp.size() == 1);
    CHECK(cp[0].first == Edge(0, 2));
    CHECK(cp[0].second == Edge(1, 3));
    CHECK(crossed_chords(d) == std::vector<Edge>{{0, 2}, {1, 3}});
  }
  SUBCASE("C5 on its own order") {
    Diagram d{cycle_graph(5), {{{0, 1, 2, 3, 4}, true}}};
    CHECK(validate(d).valid);
    CHECK(crossing_pairs(d).empty());
    CHECK(chords(d).empty());
    CHECK(boundary_edges(d).size() == 5);
  }
  SUBCASE("chord crossed twice") {
    Graph g = cycle_graph(6).plus_edges(std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}});
    Diagram d{g, {{{0, 1, 2, 3, 4, 5}, true}}};
    auto r = validate(d);
    CHECK_FALSE(r.valid);
    bool named = false;
    for (const auto& v : r.violations) named = named || v.find("{1,4}") != std::string::npos;
    CHECK(named);
    CHECK_THROWS_AS(crossing_pairs(d), InvalidInput);
  }
  SUBCASE("closed flag needs every boundary edge") {
    Diagram d{Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}}), {{{0, 1, 2, 3}, true}}};
    CHECK_FALSE(validate(d).valid);
    d.blocks[0].closed = false;
    CHECK(validate(d).valid);
  }
  SUBCASE("order that is not a block") {
    Diagram d{cycle_graph(4), {{{0, 1, 2}, true}}};
    CHECK_FALSE(validate(d).valid);
  }
}

TEST_CASE("two disjoint crossing pairs in an 8-cycle") {
  Graph g = cycle_graph(8).plus_edges(std::vector<Edge>{{0, 2}, {1, 3}, {4, 6}, {5, 7}});
  Diagram d{g, {{{0, 1, 2, 3, 4, 5, 6, 7}, true}}};
  REQUIRE(validate(d).valid);
  CHECK(crossing_pairs(d).size() == 2);
}

TEST_CASE("outerplanar diagrams have no crossings") {
  Graph fan(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  auto d = recognize(fan);
  REQUIRE(d);
  CHECK(crossing_pairs(*d).empty());
}

TEST_CASE("recognize") {
  SUBCASE("K4") {
    auto d = recognize(complete_graph(4));
    REQUIRE(d);
    CHECK(validate(*d).valid);
    CHECK(crossing_pairs(*d).size() == 1);
  }
  SUBCASE("K5") { CHECK_FALSE(recognize(complete_graph(5)).has_value()); }
  SUBCASE("K2,3") {
    auto d = recognize(complete_bipartite(2, 3));
    REQUIRE(d);
    REQUIRE(d->blocks.size() == 1);
    CHECK(crossing_pairs(*d).size() == 1);
    CHECK_FALSE(d->blocks[0].closed);
  }
  SUBCASE("guard") {
    CHECK_THROWS_AS(recognize(cycle_graph(12)), GuardExceeded);
    CHECK(recognize(cycle_graph(12), 12).has_value());
  }
  SUBCASE("K3,3") {
    CHECK_FALSE(recognize(complete_bipartite(3, 3)).has_value());
  }
}

TEST_CASE("recognized corpus graphs validate and meet the degree bounds") {
  for (const auto& e : po_corpus(6)) {
    CHECK(validate(e.diagram).valid);
    if (e.graph.order() > 1) CHECK(e.graph.min_degree() <= 3);
  }
}

TEST_CASE("to_hamiltonian_diagram on every cycle of small random drawings") {
  int redrawn = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto d = gen_random_po(5 + static_cast<int>(seed % 5), seed, 0.8);
    std::vector<std::vector<Vertex>> cycles;
    std::vector<Vertex> path{0};
    std::vector<char> used(d.graph.order(), 0);
    used[0] = 1;
    hamiltonian_cycles(d.graph, path, used, cycles);
    for (const auto& c : cycles) {
      auto h = to_hamiltonian_diagram(d, c);
      CHECK(validate(h).valid);
      CHECK(cycle_is_boundary(h, c));
      CHECK(h.graph == d.graph);
      ++redrawn;
    }
  }
  CHECK(redrawn > 100);
}

TEST_CASE("to_hamiltonian_diagram") {
  SUBCASE("C4 drawn with crossing cycle edges") {
    Diagram d{cycle_graph(4), {{{0, 2, 1, 3}, false}}};
    REQUIRE(validate(d).valid);
    REQUIRE(crossing_pairs(d).size() == 1);
    std::vector<Vertex> c{0, 1, 2, 3};
    auto h = to_hamiltonian_diagram(d, c);
    CHECK(validate(h).valid);
    CHECK(crossing_pairs(h).empty());
    CHECK(h.graph == d.graph);
    CHECK(cycle_is_boundary(h, c));
    CHECK(h.blocks[0].closed);
  }
  SUBCASE("cycle already on the boundary") {
    auto d = k4_diagram();
    std::vector<Vertex> c{0, 1, 2, 3};
    CHECK(to_hamiltonian_diagram(d, c) == d);
  }
  SUBCASE("K4 with a cycle that uses both diagonals") {
    auto d = k4_diagram();
    std::vector<Vertex> c{0, 2, 1, 3};
    auto h = to_hamiltonian_diagram(d, c);
    CHECK(validate(h).valid);
    CHECK(cycle_is_boundary(h, c));
  }
  SUBCASE("not a hamiltonian cycle") {
    auto d = k4_diagram();
    CHECK_THROWS_AS(to_hamiltonian_diagram(d, std::vector<Vertex>{0, 1, 2}), InvalidInput);
    CHECK_THROWS_AS(to_hamiltonian_diagram(d, std::vector<Vertex>{0, 1, 0, 2}), InvalidInput);
  }
}

TEST_CASE("quasi_hamiltonize") {
  SUBCASE("K2,3 gets one helper") {
    // no hamiltonian cycle (unbalanced bipartite) but a hamiltonian path 2,0,3,1,4
    auto d = recognize(complete_bipartite(2, 3));
    REQUIRE(d);
    auto a = quasi_hamiltonize(*d);
    CHECK(a.added.size() == 1);
    CHECK(validate(a.diagram).valid);
    CHECK(a.diagram.blocks[0].closed);
    CHECK(crossing_pairs(a.diagram) == crossing_pairs(*d));
  }
  SUBCASE("closed diagram needs nothing") { CHECK(quasi_hamiltonize(k4_diagram()).added.empty()); }
  SUBCASE("path on three vertices") {
    auto d = recognize(path_graph(3));
    REQUIRE(d);
    CHECK(quasi_hamiltonize(*d).added.empty());
  }
}

TEST_CASE("maximal_completion") {
  SUBCASE("C4 becomes K4") {
    Diagram d{cycle_graph(4), {{{0, 1, 2, 3}, true}}};
    auto c = maximal_completion(d);
    CHECK(c.added == std::vector<Edge>{{0, 2}, {1, 3}});
    CHECK(c.diagram.graph == complete_graph(4));
  }
  SUBCASE("K4 and a single edge are already maximal") {
    CHECK(maximal_completion(k4_diagram()).added.empty());
    auto e = recognize(path_graph(2));
    REQUIRE(e);
    CHECK(maximal_completion(*e).added.empty());
  }
  SUBCASE("no single edge extends the output") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      auto d = gen_random_po(7, seed, 0.3);
      auto c = maximal_completion(d);
      REQUIRE(validate(c.diagram).valid);
      CHECK(c.graph_level_checked);
      CHECK(addable_edges_at_fixed_order(c.diagram).empty());
      const Graph& g = c.diagram.graph;
      for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
          if (!g.has_edge(a, b)) CHECK_FALSE(recognize(g.plus_edge({a, b})).has_value());
    }
  }
}

TEST_CASE("spliced order keeps every block drawing") {
  auto d = gen_fig1();
  auto order = spliced_order(d);
  CHECK(order.size() == static_cast<std::size_t>(d.graph.order()));
  CHECK(valid_on_order(d.graph, order));
  auto again = diagram_from_order(d.graph, order);
  CHECK(validate(again).valid);
  CHECK(crossing_pairs(again).size() == crossing_pairs(d).size());
}
