#include "pog/diagram.hpp"

#include <numeric>
#include <set>

namespace pog {

bool interleaved(std::span<const int> pos, const Edge& a, const Edge& b) {
  if (a.has(b.u) || a.has(b.v)) return false;
  const int lo = std::min(pos[a.u], pos[a.v]);
  const int hi = std::max(pos[a.u], pos[a.v]);
  auto inside = [&](Vertex x) { return lo < pos[x] && pos[x] < hi; };
  return inside(b.u) != inside(b.v);
}

namespace {

std::vector<int> positions(int n, std::span<const Vertex> order) {
  std::vector<int> pos(n, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  return pos;
}

std::vector<Edge> edges_within(const Graph& g, std::span<const int> pos) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (pos[e.u] >= 0 && pos[e.v] >= 0) out.push_back(e);
  return out;
}

bool consecutive_pairs_are_edges(const Graph& g, std::span<const Vertex> order) {
  const std::size_t m = order.size();
  if (m < 2) return true;
  for (std::size_t i = 0; i < m; ++i) {
    if (m == 2 && i == 1) break;
    if (!g.has_edge(order[i], order[(i + 1) % m])) return false;
  }
  return true;
}

// Crossing count of the order, or -1 when some chord is crossed twice.
int order_crossings(std::span<const int> pos, std::span<const Edge> es, std::vector<int>& count) {
  count.assign(es.size(), 0);
  int total = 0;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (interleaved(pos, es[i], es[j])) {
        if (++count[i] > 1 || ++count[j] > 1) return -1;
        ++total;
      }
  return total;
}

void check_valid(const Diagram& d) {
  Report r = validate(d);
  if (!r.valid) throw InvalidInput("invalid diagram: " + r.violations.front());
}

std::string block_label(std::size_t i) { return "block " + std::to_string(i); }

}  // namespace

std::vector<CrossingPair> crossings_on_order(const Graph& g, std::span<const Vertex> order) {
  auto pos = positions(g.order(), order);
  auto es = edges_within(g, pos);
  std::vector<CrossingPair> out;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (interleaved(pos, es[i], es[j])) out.push_back({es[i], es[j]});
  return out;
}

Report validate(const Diagram& d) {
  Report r;
  const Graph& g = d.graph;
  const int n = g.order();
  auto bs = blocks(g);
  std::vector<int> matched(bs.blocks.size(), 0);

  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const auto& order = d.blocks[i].order;
    std::vector<Vertex> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    bool in_range = std::all_of(sorted.begin(), sorted.end(), [&](Vertex v) { return v >= 0 && v < n; });
    if (!in_range) {
      r.fail(block_label(i) + " has a vertex out of range");
      continue;
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      r.fail(block_label(i) + " repeats a vertex");
      continue;
    }
    auto it = std::find_if(bs.blocks.begin(), bs.blocks.end(),
                           [&](const Block& b) { return b.vertices == sorted; });
    if (it == bs.blocks.end()) {
      r.fail(block_label(i) + " is not a block of the graph");
      continue;
    }
    ++matched[it - bs.blocks.begin()];

    if (d.blocks[i].closed && !consecutive_pairs_are_edges(g, order))
      r.fail(block_label(i) + " is marked closed but misses a boundary edge");

    auto pos = positions(n, order);
    const auto& es = it->edges;
    std::vector<std::vector<Edge>> partners(es.size());
    for (std::size_t a = 0; a < es.size(); ++a)
      for (std::size_t b = a + 1; b < es.size(); ++b)
        if (interleaved(pos, es[a], es[b])) {
          partners[a].push_back(es[b]);
          partners[b].push_back(es[a]);
        }
    for (std::size_t a = 0; a < es.size(); ++a)
      if (partners[a].size() > 1)
        r.fail("chord " + to_string(es[a]) + " crossed by " + to_string(partners[a][0]) + " and " +
               to_string(partners[a][1]));
  }
  for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
    std::string vs;
    for (Vertex v : bs.blocks[b].vertices) vs += (vs.empty() ? "" : ",") + std::to_string(v);
    if (matched[b] == 0) r.fail("graph block {" + vs + "} has no order");
    if (matched[b] > 1) r.fail("graph block {" + vs + "} has several orders");
  }
  return r;
}

std::vector<CrossingPair> crossing_pairs(const Diagram& d) {
  check_valid(d);
  std::vector<CrossingPair> out;
  for (const auto& b : d.blocks) {
    auto part = crossings_on_order(d.graph, b.order);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> crossed_chords(const Diagram& d) {
  std::set<Edge> s;
  for (const auto& p : crossing_pairs(d)) {
    s.insert(p.first);
    s.insert(p.second);
  }
  return {s.begin(), s.end()};
}

std::vector<Edge> boundary_edges(const Diagram& d) {
  check_valid(d);
  std::set<Edge> s;
  for (const auto& b : d.blocks) {
    const std::size_t m = b.order.size();
    for (std::size_t i = 0; i < m && m >= 2; ++i) {
      Edge e(b.order[i], b.order[(i + 1) % m]);
      if (d.graph.has_edge(e)) s.insert(e);
    }
  }
  return {s.begin(), s.end()};
}

std::vector<Edge> chords(const Diagram& d) {
  auto boundary = boundary_edges(d);
  std::vector<Edge> out;
  std::set_difference(d.graph.edges().begin(), d.graph.edges().end(), boundary.begin(), boundary.end(),
                      std::back_inserter(out));
  return out;
}

Diagram diagram_from_order(const Graph& g, std::span<const Vertex> order) {
  Diagram d{g, {}};
  for (const Block& b : blocks(g).blocks) {
    BlockOrder bo;
    for (Vertex v : order)
      if (std::binary_search(b.vertices.begin(), b.vertices.end(), v)) bo.order.push_back(v);
    if (bo.order.size() != b.vertices.size()) throw InvalidInput("order misses a vertex of a block");
    bo.closed = consecutive_pairs_are_edges(g, bo.order);
    d.blocks.push_back(std::move(bo));
  }
  return d;
}

std::vector<Vertex> spliced_order(const Diagram& d) {
  const int n = d.graph.order();
  std::vector<Vertex> out;
  std::vector<char> placed(n, 0);
  std::vector<char> used(d.blocks.size(), 0);
  // Blocks grouped by vertex for the splice search.
  std::vector<std::vector<int>> at(n);
  for (std::size_t i = 0; i < d.blocks.size(); ++i)
    for (Vertex v : d.blocks[i].order) at[v].push_back(static_cast<int>(i));

  for (Vertex start = 0; start < n; ++start) {
    if (placed[start] || at[start].empty()) continue;
    std::vector<Vertex> comp;
    comp.push_back(start);
    placed[start] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t p = 0; p < comp.size() && !grew; ++p) {
        Vertex c = comp[p];
        for (int bi : at[c]) {
          if (used[bi]) continue;
          used[bi] = 1;
          const auto& ord = d.blocks[bi].order;
          auto it = std::find(ord.begin(), ord.end(), c);
          std::vector<Vertex> run;
          for (std::size_t k = 1; k < ord.size(); ++k) run.push_back(ord[(it - ord.begin() + k) % ord.size()]);
          for (Vertex v : run) placed[v] = 1;
          comp.insert(comp.begin() + static_cast<std::ptrdiff_t>(p) + 1, run.begin(), run.end());
          grew = true;
          break;
        }
      }
    }
    out.insert(out.end(), comp.begin(), comp.end());
  }
  for (Vertex v = 0; v < n; ++v)
    if (!placed[v]) out.push_back(v);
  return out;
}

bool valid_on_order(const Graph& g, std::span<const Vertex> order) {
  auto pos = positions(g.order(), order);
  std::vector<int> count;
  for (const Block& b : blocks(g).blocks) {
    for (Vertex v : b.vertices)
      if (pos[v] < 0) return false;
    if (order_crossings(pos, b.edges, count) < 0) return false;
  }
  return true;
}

std::optional<Diagram> recognize(const Graph& g, int guard) {
  Diagram d{g, {}};
  std::vector<int> count;
  for (const Block& b : blocks(g).blocks) {
    const auto& vs = b.vertices;
    const int m = static_cast<int>(vs.size());
    if (m <= 3) {
      d.blocks.push_back({vs, true});
      continue;
    }
    if (m > guard) throw GuardExceeded("block too large for exhaustive recognition");
    std::vector<Vertex> perm(vs.begin() + 1, vs.end());
    std::vector<Vertex> order(m);
    std::vector<int> pos(g.order(), -1);
    std::optional<BlockOrder> best;
    int best_cross = 0;
    do {
      if (perm.front() > perm.back()) continue;  // reflection of an earlier order
      order[0] = vs[0];
      std::copy(perm.begin(), perm.end(), order.begin() + 1);
      for (int i = 0; i < m; ++i) pos[order[i]] = i;
      int c = order_crossings(pos, b.edges, count);
      if (c < 0) continue;
      bool closed = consecutive_pairs_are_edges(g, order);
      if (!best || c < best_cross || (c == best_cross && closed && !best->closed)) {
        best = BlockOrder{order, closed};
        best_cross = c;
        if (c == 0 && closed) break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!best) return std::nullopt;
    d.blocks.push_back(*best);
  }
  return d;
}

Augmented quasi_hamiltonize(const Diagram& d) {
  check_valid(d);
  std::set<Edge> add;
  for (const auto& b : d.blocks) {
    const std::size_t m = b.order.size();
    if (m < 3) continue;
    for (std::size_t i = 0; i < m; ++i) {
      Edge e(b.order[i], b.order[(i + 1) % m]);
      if (!d.graph.has_edge(e)) add.insert(e);
    }
  }
  Augmented out;
  out.added.assign(add.begin(), add.end());
  out.diagram.graph = d.graph.plus_edges(out.added);
  out.diagram.blocks = d.blocks;
  for (auto& b : out.diagram.blocks) b.closed = true;
  return out;
}

namespace {

// Every edge drawn on the one circle crosses at most one other edge. Stricter
// than valid_on_order, which ignores crossings between different blocks.
bool drawn_on_circle(const Graph& g, std::span<const Vertex> order) {
  auto pos = positions(g.order(), order);
  for (const Edge& e : g.edges())
    if (pos[e.u] < 0 || pos[e.v] < 0) return false;
  std::vector<int> count;
  return order_crossings(pos, g.edges(), count) >= 0;
}

}  // namespace

std::vector<Edge> fill_at_fixed_order(Graph& g, std::span<const Vertex> order) {
  std::vector<Edge> added;
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.has_edge(a, b)) continue;
      Graph h = g.plus_edge({a, b});
      if (drawn_on_circle(h, order)) {
        g = std::move(h);
        added.emplace_back(a, b);
      }
    }
  return added;
}

std::vector<Edge> addable_edges_at_fixed_order(const Diagram& d) {
  check_valid(d);
  auto order = spliced_order(d);
  std::vector<Edge> out;
  const int n = d.graph.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!d.graph.has_edge(a, b) && drawn_on_circle(d.graph.plus_edge({a, b}), order)) out.emplace_back(a, b);
  return out;
}

Completion maximal_completion(const Diagram& d, int guard) {
  check_valid(d);
  Graph g = d.graph;
  auto order = spliced_order(d);
  Completion out;
  auto added = fill_at_fixed_order(g, order);
  out.added = added;
  if (static_cast<int>(g.non_isolated().size()) <= guard && g.order() <= guard) {
    out.graph_level_checked = true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex a = 0; a < g.order() && !changed; ++a)
        for (Vertex b = a + 1; b < g.order() && !changed; ++b) {
          if (g.has_edge(a, b)) continue;
          Graph h = g.plus_edge({a, b});
          auto r = recognize(h, guard);
          if (!r) continue;
          g = std::move(h);
          out.added.emplace_back(a, b);
          order = spliced_order(*r);
          auto more = fill_at_fixed_order(g, order);
          out.added.insert(out.added.end(), more.begin(), more.end());
          changed = true;
        }
    }
  }
  std::sort(out.added.begin(), out.added.end());
  out.diagram = diagram_from_order(g, order);
  return out;
}

}  // namespace pog
