#include "pog/graph.hpp"

#include <functional>
#include <numeric>
#include <set>

#include "pog/minors.hpp"

namespace pog {

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  build();
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  edges_.assign(edges.begin(), edges.end());
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) throw InvalidInput("edge " + to_string(e) + " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InvalidInput("duplicate edge");
  build();
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : n_(n) {
  std::vector<Edge> es;
  for (auto [a, b] : edges) {
    if (a == b) throw InvalidInput("self-loop at vertex " + std::to_string(a));
    es.emplace_back(a, b);
  }
  *this = Graph(n, es);
}

void Graph::build() {
  adj_.assign(n_, {});
  matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    matrix_[static_cast<std::size_t>(e.u) * n_ + e.v] = 1;
    matrix_[static_cast<std::size_t>(e.v) * n_ + e.u] = 1;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  return matrix_[static_cast<std::size_t>(a) * n_ + b] != 0;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return d;
}

int Graph::min_positive_degree() const {
  int d = 0;
  for (const auto& a : adj_)
    if (!a.empty() && (d == 0 || static_cast<int>(a.size()) < d)) d = static_cast<int>(a.size());
  return d;
}

std::vector<Vertex> Graph::non_isolated() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (!adj_[v].empty()) out.push_back(v);
  return out;
}

Graph Graph::plus_edge(const Edge& e) const {
  if (has_edge(e)) return *this;
  std::vector<Edge> es = edges_;
  es.push_back(e);
  return Graph(n_, es);
}

Graph Graph::plus_edges(std::span<const Edge> add) const {
  std::vector<Edge> es = edges_;
  for (const Edge& e : add)
    if (!has_edge(e) && std::find(es.begin() + static_cast<long>(edges_.size()), es.end(), e) == es.end())
      es.push_back(e);
  return Graph(n_, es);
}

Graph Graph::minus_edge(const Edge& e) const {
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const Edge& f : edges_)
    if (f != e) es.push_back(f);
  return Graph(n_, es);
}

Graph Graph::minus_edges(std::span<const Edge> rm) const {
  std::set<Edge> drop(rm.begin(), rm.end());
  std::vector<Edge> es;
  for (const Edge& f : edges_)
    if (!drop.count(f)) es.push_back(f);
  return Graph(n_, es);
}

Graph Graph::minus_vertices(std::span<const Vertex> vs) const {
  std::vector<char> gone(n_, 0);
  for (Vertex v : vs) gone[v] = 1;
  std::vector<Edge> es;
  for (const Edge& f : edges_)
    if (!gone[f.u] && !gone[f.v]) es.push_back(f);
  return Graph(n_, es);
}

Graph Graph::edge_subgraph(std::span<const Edge> es) const {
  for (const Edge& e : es)
    if (!has_edge(e)) throw InvalidInput("edge " + to_string(e) + " is not in the graph");
  return Graph(n_, es);
}

Graph Graph::induced_relabelled(std::span<const Vertex> vs) const {
  std::vector<int> idx(n_, -1);
  for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (const Edge& e : edges_)
    if (idx[e.u] >= 0 && idx[e.v] >= 0) es.emplace_back(idx[e.u], idx[e.v]);
  return Graph(static_cast<int>(vs.size()), es);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return Graph(a + b, es);
}

BlockStructure blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  BlockStructure out;
  std::set<Vertex> cuts;
  int timer = 0;

  // Iterative Hopcroft-Tarjan to stay safe on long paths.
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    int children;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0 || g.degree(root) == 0) continue;
    std::vector<Frame> frames{{root, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          ++f.children;
          frames.push_back({w, f.v, 0, 0});
        } else if (disc[w] < disc[f.v]) {
          stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      frames.pop_back();
      if (frames.empty()) break;
      Frame& p = frames.back();
      low[p.v] = std::min(low[p.v], low[done.v]);
      if (low[done.v] >= disc[p.v]) {
        if (p.parent >= 0 || p.children > 1) cuts.insert(p.v);
        Block b;
        std::set<Vertex> vs;
        const Edge top(p.v, done.v);
        while (true) {
          Edge e = stack.back();
          stack.pop_back();
          b.edges.push_back(e);
          vs.insert(e.u);
          vs.insert(e.v);
          if (e == top) break;
        }
        std::sort(b.edges.begin(), b.edges.end());
        b.vertices.assign(vs.begin(), vs.end());
        out.blocks.push_back(std::move(b));
      }
    }
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  out.cut_vertices.assign(cuts.begin(), cuts.end());
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> members{s}, todo{s};
    comp[s] = static_cast<int>(out.size());
    while (!todo.empty()) {
      Vertex v = todo.back();
      todo.pop_back();
      for (Vertex w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
          todo.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

bool is_biconnected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return blocks(g).cut_vertices.empty();
}

namespace {

bool connected_without(const Graph& g, const std::vector<char>& removed) {
  Vertex start = -1;
  int alive = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> todo{start};
  seen[start] = 1;
  int count = 1;
  while (!todo.empty()) {
    Vertex v = todo.back();
    todo.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        todo.push_back(w);
      }
  }
  return count == alive;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw InvalidInput("vertex connectivity needs at least two vertices");
  if (!is_connected(g)) throw InvalidInput("disconnected");
  if (g.size() == static_cast<std::size_t>(n) * (n - 1) / 2) return n - 1;
  // Smallest separating set by increasing subset size; a separator leaves >= 2 vertices.
  std::vector<char> removed(n, 0);
  for (int s = 1; s <= n - 2; ++s) {
    std::vector<int> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      for (int p : pick) removed[p] = 1;
      bool separated = !connected_without(g, removed);
      for (int p : pick) removed[p] = 0;
      if (separated) return s;
      int i = s - 1;
      while (i >= 0 && pick[i] == n - s + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n - 1;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

SubgraphKind classify_subgraph(const Graph& g, std::span<const Edge> s) {
  std::set<Edge> seen;
  for (const Edge& e : s) {
    if (!g.has_edge(e)) throw InvalidInput("edge " + to_string(e) + " is not in the graph");
    if (!seen.insert(e).second) throw InvalidInput("edge " + to_string(e) + " listed twice");
  }
  const int n = g.order();
  std::vector<int> deg(n, 0);
  Dsu dsu(n);
  bool acyclic = true;
  for (const Edge& e : seen) {
    ++deg[e.u];
    ++deg[e.v];
    if (!dsu.unite(e.u, e.v)) acyclic = false;
  }
  SubgraphKind k;
  k.forest = acyclic;
  int maxdeg = 0;
  for (int d : deg) maxdeg = std::max(maxdeg, d);
  k.matching = maxdeg <= 1;
  k.linear_forest = acyclic && maxdeg <= 2;
  // A star has at most one vertex of degree >= 2.
  std::map<int, int> centers;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] >= 2) ++centers[dsu.find(v)];
  bool stars = acyclic;
  for (auto [root, count] : centers)
    if (count > 1) stars = false;
  k.star_forest = stars;
  return k;
}

Report verify_edge_coloring(const Graph& g, const EdgeColoring& c) {
  if (c.colors.size() != g.size()) throw InvalidInput("coloring is not total on the edge set");
  for (const auto& [e, col] : c.colors)
    if (!g.has_edge(e)) throw InvalidInput("colored pair " + to_string(e) + " is not an edge");
  Report r;
  std::map<int, std::vector<Edge>> classes;
  for (const auto& [e, col] : c.colors) {
    if (col < 1 || col > c.k) r.fail("edge " + to_string(e) + " has color " + std::to_string(col) + " outside 1.." + std::to_string(c.k));
    classes[col].push_back(e);
  }
  for (const auto& [col, es] : classes) {
    SubgraphKind kind = classify_subgraph(g, es);
    if (c.mode == ColoringMode::Proper && !kind.matching) {
      std::vector<int> deg(g.order(), 0);
      for (const Edge& e : es) {
        ++deg[e.u];
        ++deg[e.v];
      }
      for (Vertex v = 0; v < g.order(); ++v)
        if (deg[v] > 1)
          r.fail("color " + std::to_string(col) + " repeats at vertex " + std::to_string(v));
    }
    if (c.mode == ColoringMode::LinearForest && !kind.linear_forest)
      r.fail("color class " + std::to_string(col) + " is not a linear forest");
  }
  return r;
}

std::string to_string(PartKind k) {
  switch (k) {
    case PartKind::Forest: return "forest";
    case PartKind::LinearForest: return "linear-forest";
    case PartKind::StarForest: return "star-forest";
    case PartKind::Matching: return "matching";
    case PartKind::OuterplanarRemainder: return "outerplanar-remainder";
  }
  return "?";
}

std::optional<PartKind> part_kind_from_string(const std::string& s) {
  for (PartKind k : {PartKind::Forest, PartKind::LinearForest, PartKind::StarForest,
                     PartKind::Matching, PartKind::OuterplanarRemainder})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

Report verify_decomposition(const Graph& g, const Decomposition& d, int minor_guard) {
  Report r;
  std::set<Edge> covered;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const Part& p = d.parts[i];
    for (const Edge& e : p.edges) {
      if (!g.has_edge(e)) {
        r.fail("part " + std::to_string(i) + " contains non-edge " + to_string(e));
        continue;
      }
      if (!covered.insert(e).second) r.fail("edge " + to_string(e) + " appears in two parts");
    }
  }
  if (covered.size() != g.size()) r.fail("parts do not cover every edge");
  if (!r.valid) return r;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const Part& p = d.parts[i];
    const std::string tag = "part " + std::to_string(i) + " (" + to_string(p.kind) + ")";
    if (p.kind == PartKind::OuterplanarRemainder) {
      if (!is_outerplanar(Graph(g.order(), p.edges), minor_guard)) r.fail(tag + " is not outerplanar");
      continue;
    }
    SubgraphKind k = classify_subgraph(g, p.edges);
    bool ok = (p.kind == PartKind::Forest && k.forest) ||
              (p.kind == PartKind::LinearForest && k.linear_forest) ||
              (p.kind == PartKind::StarForest && k.star_forest) ||
              (p.kind == PartKind::Matching && k.matching);
    if (!ok) r.fail(tag + " fails its kind predicate");
  }
  return r;
}

}  // namespace pog
