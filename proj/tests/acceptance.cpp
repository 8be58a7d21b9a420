// Runs every acceptance criterion once and prints one PASS/FAIL line each.
// Exit status is the number of failing criteria.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pog/canonical.hpp"
#include "pog/classes.hpp"
#include "pog/colorings.hpp"
#include "pog/configurations.hpp"
#include "pog/decompose.hpp"
#include "pog/generators.hpp"
#include "pog/minors.hpp"
#include "pog/oracles.hpp"

using namespace pog;

namespace {

// Budgets pinned for the stated sizes.
constexpr double kCorpusSeconds = 600.0;  // criteria 1 and 3
constexpr double kTightnessSeconds = 300.0;
constexpr int kMaxCorpusOrder = 7;
constexpr int kRandomCovers = 200;
constexpr int kRandomEvenDelta = 50;
constexpr int kRandomHamiltonian = 100;

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

SearchBudget wide_budget(double seconds) {
  SearchBudget b;
  b.max_vertices = 64;
  b.max_edges = 256;
  b.time_limit_seconds = seconds;
  return b;
}

const std::vector<EnumeratedGraph>& corpus() {
  static const auto c = po_corpus(kMaxCorpusOrder);
  return c;
}

void note(Verdict& o, const std::string& what) {
  if (o.pass) o.detail = what;
  o.pass = false;
}

std::vector<Diagram> random_diagrams(int count, int max_n, std::uint64_t seed0) {
  std::vector<Diagram> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = seed0 + static_cast<std::uint64_t>(i);
    const int n = 5 + static_cast<int>(seed % static_cast<std::uint64_t>(max_n - 4));
    const double density = 0.1 + 0.8 * static_cast<double>(seed % 9) / 8.0;
    out.push_back(gen_random_po(n, seed, density));
  }
  return out;
}

Verdict edge_coloring_optimality() {
  Verdict o;
  auto t0 = Clock::now();
  int count = 0;
  for (const auto& e : corpus()) {
    const int delta = e.graph.max_degree();
    if (delta < 4) continue;
    ++count;
    auto r = po_edge_color(e.diagram);
    if (r.coloring.k != delta || !verify_edge_coloring(e.graph, r.coloring).valid)
      note(o, "po_edge_color not a verified delta-coloring");
    auto b = brute_chromatic_index(e.graph, wide_budget(kCorpusSeconds));
    if (b.outcome != Outcome::Found || b.value != delta) note(o, "oracle disagrees");
  }
  if (seconds_since(t0) > kCorpusSeconds) note(o, "over the time target");
  if (o.pass) o.detail = std::to_string(count) + " graphs with max degree >= 4";
  return o;
}

Verdict class_two_family() {
  Verdict o;
  for (int n : {1, 2}) {
    const Graph g = gen_pn(n).graph;
    auto b = brute_chromatic_index(g);
    if (b.outcome != Outcome::Found || b.value != 4) note(o, "oracle on P_" + std::to_string(n));
    if (chromatic_index(g).value != 4) note(o, "chromatic_index on P_" + std::to_string(n));
  }
  if (o.pass) o.detail = "P_1, P_2 need 4 colors";
  return o;
}

Verdict linear_arboricity() {
  Verdict o;
  auto t0 = Clock::now();
  int cubic = 0;
  for (const auto& e : corpus()) {
    if (e.graph.max_degree() != 3) continue;
    ++cubic;
    auto r = po_linear_arboricity(e.diagram);
    if (r.coloring.k != 2 || !verify_edge_coloring(e.graph, r.coloring).valid) note(o, "max degree 3 corpus graph");
  }
  int even = 0;
  for (std::uint64_t seed = 1; even < kRandomEvenDelta && seed < 100000; ++seed) {
    const int n = 10 + static_cast<int>(seed % 21);
    auto d = gen_random_po(n, seed, 0.95);
    const int delta = d.graph.max_degree();
    if (delta < 6 || delta % 2) continue;
    ++even;
    auto r = po_linear_arboricity(d);
    if (r.coloring.k != delta / 2 || !verify_edge_coloring(d.graph, r.coloring).valid || r.exact_fallback)
      note(o, "even max degree instance seed " + std::to_string(seed));
  }
  if (even < kRandomEvenDelta) note(o, "not enough even max degree instances");
  if (seconds_since(t0) > kCorpusSeconds) note(o, "over the time target");
  if (o.pass) o.detail = std::to_string(cubic) + " max degree 3 graphs, " + std::to_string(even) + " random even instances";
  return o;
}

Verdict tightness() {
  Verdict o;
  auto t0 = Clock::now();
  const Diagram q3 = gen_qn(3);
  auto b = brute_linear_arboricity(q3.graph, wide_budget(kTightnessSeconds));
  if (b.outcome != Outcome::Found || b.value != 3) note(o, "oracle on Q_3: " + to_string(b.outcome));
  if (po_linear_arboricity(q3).coloring.k != 3) note(o, "po_linear_arboricity on Q_3");
  if (seconds_since(t0) > kTightnessSeconds) note(o, "over the time target");
  if (o.pass) o.detail = "la(Q_3) = 3";
  return o;
}

std::vector<Diagram> cover_inputs() {
  std::vector<Diagram> out;
  for (const auto& e : corpus()) out.push_back(e.diagram);
  for (auto& d : random_diagrams(kRandomCovers, 40, 1000)) out.push_back(std::move(d));
  return out;
}

Verdict outerplanar_covers() {
  Verdict o;
  const auto inputs = cover_inputs();
  for (const auto& d : inputs)
    for (PartKind k : {PartKind::LinearForest, PartKind::StarForest}) {
      auto dec = cover_outerplanar_plus(d, k);
      if (dec.parts.size() != 2 || dec.parts[0].kind != k || !verify_decomposition(d.graph, dec).valid)
        note(o, "cover failed on a " + std::to_string(d.graph.order()) + "-vertex graph");
    }
  if (o.pass) o.detail = std::to_string(inputs.size()) + " diagrams, both forest kinds";
  return o;
}

Verdict forests_and_matching() {
  Verdict o;
  const auto inputs = cover_inputs();
  for (const auto& d : inputs) {
    auto dec = two_forests_plus_matching(d);
    if (!verify_decomposition(d.graph, dec).valid) note(o, "two forests plus matching failed");
    if (exists_k_forest_partition(d.graph, 3, wide_budget(60)).outcome != Outcome::Found)
      note(o, "no 3-forest partition on a " + std::to_string(d.graph.order()) + "-vertex graph");
  }
  if (o.pass) o.detail = std::to_string(inputs.size()) + " diagrams";
  return o;
}

Verdict negative_results() {
  Verdict o;
  if (exists_removal_decomposition(gen_mat12().graph, RemovalKind::Matching, wide_budget(600)).outcome !=
      Outcome::None)
    note(o, "Mat12 admits a matching removal");
  for (int n = 6; n <= 10; ++n)
    if (exists_k_forest_partition(gen_gn(n).graph, 2, wide_budget(600)).outcome != Outcome::None)
      note(o, "G_" + std::to_string(n) + " splits into two forests");
  if (o.pass) o.detail = "Mat12 and G_6..G_10";
  return o;
}

Verdict structure() {
  Verdict o;
  const Graph k4 = complete_graph(4);
  int three_connected = 0;
  for (const auto& e : corpus()) {
    const Graph& g = e.graph;
    if (g.order() >= 2 && g.min_degree() > 3) note(o, "min degree above 3");
    if (g.order() >= 2 && vertex_connectivity(g) >= 3) {
      ++three_connected;
      if (!isomorphic(g, k4)) note(o, "3-connected graph other than K4");
    }
  }
  if (o.pass) o.detail = std::to_string(corpus().size()) + " graphs, " + std::to_string(three_connected) + " 3-connected";
  return o;
}

// Hamiltonian cycles of g through vertex 0, in DFS order.
std::vector<std::vector<Vertex>> hamiltonian_cycles(const Graph& g, std::size_t limit) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.order();
  std::vector<Vertex> path{0};
  std::vector<bool> used(n, false);
  used[0] = true;
  std::function<void()> rec = [&] {
    if (out.size() >= limit) return;
    const Vertex last = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (g.has_edge(last, 0) && path[1] < path.back()) out.push_back(path);
      return;
    }
    for (Vertex w : g.neighbors(last))
      if (!used[w]) {
        used[w] = true;
        path.push_back(w);
        rec();
        path.pop_back();
        used[w] = false;
      }
  };
  rec();
  return out;
}

bool boundary_is(const Diagram& d, const std::vector<Vertex>& c) {
  if (d.blocks.size() != 1 || !d.blocks[0].closed) return false;
  const auto& ord = d.blocks[0].order;
  if (ord.size() != c.size()) return false;
  std::vector<Edge> a, b;
  for (std::size_t i = 0; i < c.size(); ++i) {
    a.emplace_back(c[i], c[(i + 1) % c.size()]);
    b.emplace_back(ord[i], ord[(i + 1) % c.size()]);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Verdict hamiltonian_diagram() {
  Verdict o;
  std::mt19937_64 rng(2024);
  int moved = 0;
  for (int i = 0; i < kRandomHamiltonian; ++i) {
    const int n = 4 + i % 9;
    auto d = gen_random_po(n, 5000 + static_cast<std::uint64_t>(i), 0.3 + 0.6 * (i % 5) / 4.0);
    auto cycles = hamiltonian_cycles(d.graph, 64);
    if (cycles.empty()) {
      note(o, "generated diagram without a hamiltonian cycle");
      continue;
    }
    const auto& c = cycles[std::uniform_int_distribution<std::size_t>(0, cycles.size() - 1)(rng)];
    moved += !boundary_is(d, c);
    auto h = to_hamiltonian_diagram(d, c);
    if (!validate(h).valid || !boundary_is(h, c) || !(h.graph == d.graph)) note(o, "redraw failed");
  }
  if (o.pass)
    o.detail = std::to_string(kRandomHamiltonian) + " diagrams, " + std::to_string(moved) + " with a non-boundary cycle";
  return o;
}

Verdict unavoidability() {
  Verdict o;
  int dense = 0, literal = 0, literal_missing = 0;
  for (const auto& e : corpus()) {
    const Graph& g = e.graph;
    const int delta = g.max_degree();
    if (g.size() == 0) continue;
    bool ok = g.min_degree() >= 2;
    for (const Edge& f : g.edges()) ok = ok && g.degree(f.u) + g.degree(f.v) >= delta + 2;
    if (ok) {
      const bool found = find_configuration(e.diagram, coloring_patterns()).has_value();
      ++literal;
      literal_missing += !found;
      if (delta >= 4) {
        ++dense;
        if (!found) note(o, "no configuration on a dense graph");
      }
    }
    if (delta >= 4 && po_edge_color(e.diagram).exact_fallback) note(o, "exact fallback fired");
  }
  if (o.pass)
    o.detail = std::to_string(dense) + " dense graphs with max degree >= 4; literal scope also lists " +
               std::to_string(literal_missing) + " of " + std::to_string(literal) + " without a match, all max degree <= 3";
  return o;
}

Verdict class_relations() {
  Verdict o;
  const Graph k4 = complete_graph(4);
  int graphs = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      ++graphs;
      ClassFlags f = class_membership(g);
      // P contains P_H contains O.
      if (f.quasi_hamiltonian_po && !f.pseudo_outerplanar) note(o, "P_H outside P");
      if (f.outerplanar && !f.quasi_hamiltonian_po) note(o, "O outside P_H");
      // P_H meets the K4-minor-free graphs exactly in O.
      if ((f.quasi_hamiltonian_po && f.k4_minor_free) != f.outerplanar) note(o, "P_H and S do not meet in O");
      // K2,3-minor-free graphs are quasi-hamiltonian PO.
      if (f.k23_minor_free && !f.quasi_hamiltonian_po) note(o, "M_23 outside P_H");
      // A 2-connected K2,3-minor-free graph is outerplanar or K4.
      if (is_biconnected(g) && f.k23_minor_free && !f.outerplanar && !isomorphic(g, k4))
        note(o, "2-connected M_23 graph neither O nor K4");
    }
  // The inclusion is strict: (K1 + K2) joined to two independent vertices.
  Graph witness(5, {{1, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  ClassFlags w = class_membership(witness);
  if (!w.quasi_hamiltonian_po || w.k23_minor_free) note(o, "strictness witness");
  if (o.pass) o.detail = std::to_string(graphs) + " connected graphs, strict witness confirmed";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {1, "edge-coloring optimality", edge_coloring_optimality},
      {2, "class-2 family", class_two_family},
      {3, "linear arboricity", linear_arboricity},
      {4, "tightness", tightness},
      {5, "outerplanar plus forest covers", outerplanar_covers},
      {6, "two forests plus matching, arboricity 3", forests_and_matching},
      {7, "negative results", negative_results},
      {8, "structure", structure},
      {9, "hamiltonian diagram", hamiltonian_diagram},
      {10, "unavoidability", unavoidability},
      {11, "class relations", class_relations},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Verdict o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s  criterion %2d  %-42s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds_since(t0),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
