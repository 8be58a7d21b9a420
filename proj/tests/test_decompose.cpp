#include "doctest.h"

#include <algorithm>
#include <vector>

#include "pog/decompose.hpp"
#include "pog/generators.hpp"
#include "pog/minors.hpp"
#include "pog/oracles.hpp"

using namespace pog;

namespace {

Diagram k4_diagram() { return Diagram{complete_graph(4), {{{0, 1, 2, 3}, true}}}; }

// C5 on 0..4 with crossing chords {0,2} and {1,4}.
Diagram crossed_pentagon() {
  return Diagram{cycle_graph(5).plus_edges(std::vector<Edge>{{0, 2}, {1, 4}}), {{{0, 1, 2, 3, 4}, true}}};
}

int forest_degree(const std::vector<Edge>& t, Vertex v) {
  return static_cast<int>(std::count_if(t.begin(), t.end(), [&](const Edge& e) { return e.has(v); }));
}

bool is_root(const std::vector<Edge>& t, Vertex v) {
  const int d = forest_degree(t, v);
  if (d == 0) return true;
  if (d >= 2) return true;
  Vertex w = -1;
  for (const Edge& e : t)
    if (e.has(v)) w = e.other(v);
  return forest_degree(t, w) == 1;  // both ends of a K2 are roots
}

void check_extraction(const Diagram& d, const ExtractionResult& r, Vertex y, Vertex x, Vertex z, bool star) {
  auto crossed = crossed_chords(d);
  for (const Edge& e : r.forest) CHECK(std::binary_search(crossed.begin(), crossed.end(), e));
  auto kind = classify_subgraph(d.graph, r.forest);
  CHECK(kind.forest);
  if (star) {
    CHECK(kind.star_forest);
    CHECK(is_root(r.forest, x));
    CHECK(is_root(r.forest, z));
  } else {
    CHECK(kind.linear_forest);
    CHECK(forest_degree(r.forest, x) <= 1);
    CHECK(forest_degree(r.forest, z) <= 1);
  }
  CHECK(forest_degree(r.forest, y) == 0);
  CHECK(validate(r.remainder).valid);
  CHECK(crossing_pairs(r.remainder).empty());
  CHECK(r.remainder.graph.size() + r.forest.size() == d.graph.size());
}

// Every set of crossed chords that meets the extraction contract, by brute force.
std::vector<std::vector<Edge>> contract_forests(const Diagram& d, Vertex y, Vertex x, Vertex z, bool star) {
  auto crossed = crossed_chords(d);
  auto pairs = crossing_pairs(d);
  const int k = static_cast<int>(crossed.size());
  REQUIRE(k < 20);
  std::vector<std::vector<Edge>> out;
  for (long mask = 0; mask < (1L << k); ++mask) {
    std::vector<Edge> t;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) t.push_back(crossed[i]);
    auto in_t = [&](const Edge& e) { return std::binary_search(t.begin(), t.end(), e); };
    if (forest_degree(t, y) != 0) continue;
    if (!std::all_of(pairs.begin(), pairs.end(), [&](const CrossingPair& p) { return in_t(p.first) || in_t(p.second); }))
      continue;
    auto kind = classify_subgraph(d.graph, t);
    if (star ? !(kind.star_forest && is_root(t, x) && is_root(t, z))
             : !(kind.linear_forest && forest_degree(t, x) <= 1 && forest_degree(t, z) <= 1))
      continue;
    out.push_back(t);
  }
  return out;
}

bool among(const std::vector<std::vector<Edge>>& all, const std::vector<Edge>& t) {
  return std::find(all.begin(), all.end(), t) != all.end();
}

}  // namespace

TEST_CASE("extract_linear_forest examples") {
  SUBCASE("K4") {
    auto d = k4_diagram();
    auto r = extract_linear_forest(d, 0, 3, 1);
    CHECK(r.forest == std::vector<Edge>{{1, 3}});
    CHECK(r.remainder.graph == complete_graph(4).minus_edge({1, 3}));
    check_extraction(d, r, 0, 3, 1, false);
  }
  SUBCASE("outerplanar") {
    Diagram d{cycle_graph(6).plus_edge({0, 3}), {{{0, 1, 2, 3, 4, 5}, true}}};
    CHECK(extract_linear_forest(d, 2, 1, 3).forest.empty());
  }
  SUBCASE("crossed pentagon") {
    auto d = crossed_pentagon();
    auto r = extract_linear_forest(d, 3, 2, 4);
    // Either chord works; y has degree two, so x = 2 becomes the special
    // vertex of the contracted diagram and keeps degree zero.
    CHECK(r.forest == std::vector<Edge>{{1, 4}});
    CHECK(among(contract_forests(d, 3, 2, 4, false), r.forest));
    check_extraction(d, r, 3, 2, 4, false);
  }
  SUBCASE("preconditions") {
    auto d = k4_diagram();
    CHECK_THROWS_AS(extract_linear_forest(d, 0, 2, 1), InvalidInput);
    CHECK_THROWS_AS(extract_linear_forest(*recognize(complete_bipartite(2, 3)), 0, 1, 2), InvalidInput);
  }
}

TEST_CASE("extract_star_forest examples") {
  SUBCASE("K4") {
    auto d = k4_diagram();
    auto r = extract_star_forest(d, 0, 3, 1);
    CHECK(r.forest == std::vector<Edge>{{1, 3}});
    check_extraction(d, r, 0, 3, 1, true);
  }
  SUBCASE("outerplanar") {
    Diagram d{cycle_graph(5), {{{0, 1, 2, 3, 4}, true}}};
    CHECK(extract_star_forest(d, 0, 4, 1).forest.empty());
  }
  SUBCASE("crossed pentagon") {
    auto d = crossed_pentagon();
    auto r = extract_star_forest(d, 3, 2, 4);
    CHECK(r.forest == std::vector<Edge>{{0, 2}});
    check_extraction(d, r, 3, 2, 4, true);
  }
  SUBCASE("no star forest keeps both neighbours as roots") {
    // y = 0 with boundary 0..5; chords {0,2} x {1,3} and {0,4} x {3,5} force
    // {1,3} and {3,5}, a path centred at 3 with leaves z = 1 and x = 5.
    Diagram d{cycle_graph(6).plus_edges(std::vector<Edge>{{0, 2}, {1, 3}, {0, 4}, {3, 5}}), {{{0, 1, 2, 3, 4, 5}, true}}};
    REQUIRE(validate(d).valid);
    CHECK(contract_forests(d, 0, 5, 1, true).empty());
    CHECK_THROWS_AS(extract_star_forest(d, 0, 5, 1), NoSolution);
    auto r = extract_linear_forest(d, 0, 5, 1);
    CHECK(r.forest == std::vector<Edge>{{1, 3}, {3, 5}});
    check_extraction(d, r, 0, 5, 1, false);
    CHECK(classify_subgraph(d.graph, cover_outerplanar_plus(d, PartKind::StarForest).parts[0].edges).star_forest);
  }
  SUBCASE("tiny budget") {
    CHECK_THROWS_AS(extract_star_forest(k4_diagram(), 0, 3, 1, 0), GuardExceeded);
  }
}

TEST_CASE("extraction contract on every closed single-block corpus diagram") {
  int checked = 0, no_star = 0;
  for (const auto& e : po_corpus(7)) {
    const Diagram& d = e.diagram;
    if (d.blocks.size() != 1 || !d.blocks[0].closed || d.blocks[0].order.size() < 3) continue;
    if (static_cast<int>(d.blocks[0].order.size()) != e.graph.order()) continue;
    const auto& o = d.blocks[0].order;
    const int m = static_cast<int>(o.size());
    for (int i = 0; i < m; ++i) {
      const Vertex y = o[i], x = o[(i + m - 1) % m], z = o[(i + 1) % m];
      auto lin = extract_linear_forest(d, y, x, z);
      check_extraction(d, lin, y, x, z, false);
      CHECK(among(contract_forests(d, y, x, z, false), lin.forest));
      auto stars = contract_forests(d, y, x, z, true);
      if (stars.empty()) {
        CHECK_THROWS_AS(extract_star_forest(d, y, x, z), NoSolution);
        ++no_star;
      } else {
        auto st = extract_star_forest(d, y, x, z);
        check_extraction(d, st, y, x, z, true);
        CHECK(among(stars, st.forest));
      }
      ++checked;
    }
  }
  CHECK(checked > 100);
  MESSAGE("star extraction impossible in " << no_star << " of " << checked << " cases");
}

TEST_CASE("cover_outerplanar_plus") {
  for (PartKind kind : {PartKind::LinearForest, PartKind::StarForest}) {
    CAPTURE(to_string(kind));
    SUBCASE("two-block fig1 graph") {
      auto d = gen_fig1();
      auto dec = cover_outerplanar_plus(d, kind);
      REQUIRE(dec.parts.size() == 2);
      CHECK(dec.parts[0].kind == kind);
      CHECK(dec.parts[1].kind == PartKind::OuterplanarRemainder);
      CHECK(verify_decomposition(d.graph, dec).valid);
    }
    SUBCASE("outerplanar graph") {
      Graph g = cycle_graph(6).plus_edge({0, 3});
      auto dec = cover_outerplanar_plus(g, kind);
      CHECK(dec.parts[0].edges.empty());
      CHECK(dec.parts[1].edges.size() == g.size());
    }
    SUBCASE("Q_3") {
      auto d = gen_qn(3);
      auto dec = cover_outerplanar_plus(d, kind);
      CHECK(verify_decomposition(d.graph, dec, 40).valid);
      auto crossed = crossed_chords(d);
      for (const Edge& e : dec.parts[0].edges) CHECK(std::binary_search(crossed.begin(), crossed.end(), e));
    }
  }
  CHECK_THROWS_AS(cover_outerplanar_plus(complete_graph(5), PartKind::LinearForest), NotPseudoOuterplanar);
  CHECK_THROWS_AS(cover_outerplanar_plus(gen_fig1(), PartKind::Matching), InvalidInput);
}

TEST_CASE("peel_maximal") {
  SUBCASE("triangle") {
    auto d = recognize(complete_graph(3));
    REQUIRE(d);
    auto s = peel_maximal(*d);
    CHECK(s.kind == PieceKind::K3);
    CHECK(s.smaller.graph.size() == 1);
  }
  SUBCASE("completed C4") {
    Diagram c4{cycle_graph(4), {{{0, 1, 2, 3}, true}}};
    auto s = peel_maximal(maximal_completion(c4).diagram);
    CHECK(s.kind == PieceKind::K4);
    CHECK(s.removed.size() == 2);
    CHECK(s.smaller.graph.size() == 1);
  }
  SUBCASE("completed C6") {
    Diagram c6{cycle_graph(6), {{{0, 1, 2, 3, 4, 5}, true}}};
    auto full = maximal_completion(c6).diagram;
    auto s = peel_maximal(full);
    CHECK(validate(s.smaller).valid);
    auto boundary = boundary_edges(s.smaller);
    CHECK(std::find(boundary.begin(), boundary.end(), s.glue) != boundary.end());
    // removed vertices stay behind as isolated ones; only the block must be full
    const auto& rest = s.smaller.blocks[0].order;
    auto inside = [&](Vertex v) { return std::find(rest.begin(), rest.end(), v) != rest.end(); };
    for (const Edge& e : maximal_completion(s.smaller).added) CHECK_FALSE((inside(e.u) && inside(e.v)));
    CHECK(s.smaller.graph.size() < full.graph.size());
  }
  SUBCASE("atomic") {
    auto d = recognize(path_graph(2));
    REQUIRE(d);
    CHECK_THROWS_WITH_AS(peel_maximal(*d), "atomic", InvalidInput);
  }
}

TEST_CASE("two_forests_plus_matching") {
  SUBCASE("K4") {
    auto dec = two_forests_plus_matching(complete_graph(4));
    REQUIRE(dec.parts.size() == 3);
    CHECK(dec.parts[0].edges.size() == 3);
    CHECK(dec.parts[1].edges.size() == 2);
    CHECK(dec.parts[2].edges.size() == 1);
    CHECK(verify_decomposition(complete_graph(4), dec).valid);
  }
  SUBCASE("C5") { CHECK(verify_decomposition(cycle_graph(5), two_forests_plus_matching(cycle_graph(5))).valid); }
  SUBCASE("G_6") {
    auto d = gen_gn(6);
    CHECK(verify_decomposition(d.graph, two_forests_plus_matching(d)).valid);
  }
  SUBCASE("disconnected input with isolated vertices") {
    Graph g(8, {{0, 1}, {1, 2}, {0, 2}, {4, 5}, {5, 6}, {6, 7}, {4, 7}, {4, 6}, {5, 7}});
    CHECK(verify_decomposition(g, two_forests_plus_matching(g)).valid);
  }
  SUBCASE("every corpus graph") {
    for (const auto& e : po_corpus(7)) CHECK(verify_decomposition(e.graph, two_forests_plus_matching(e.diagram)).valid);
  }
  CHECK_THROWS_AS(two_forests_plus_matching(complete_graph(5)), NotPseudoOuterplanar);
}
