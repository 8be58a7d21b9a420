#include "pog/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pog/minors.hpp"

namespace pog {

namespace {

class Meter {
 public:
  explicit Meter(const SearchBudget& b) : b_(b), start_(std::chrono::steady_clock::now()) {}

  // False once the node or time budget is spent.
  bool tick() {
    if (over_) return false;
    if (++nodes_ > b_.max_nodes) over_ = true;
    if ((nodes_ & 4095) == 0) {
      std::chrono::duration<double> t = std::chrono::steady_clock::now() - start_;
      if (t.count() > b_.time_limit_seconds) over_ = true;
    }
    return !over_;
  }
  bool over() const { return over_; }

 private:
  const SearchBudget& b_;
  std::chrono::steady_clock::time_point start_;
  long long nodes_ = 0;
  bool over_ = false;
};

bool too_big(const Graph& g, const SearchBudget& b) {
  return static_cast<int>(g.non_isolated().size()) > b.max_vertices || static_cast<int>(g.size()) > b.max_edges;
}

// Edges in breadth-first order from a maximum-degree vertex, so that each
// edge meets already-colored ones early.
std::vector<Edge> bfs_edges(const Graph& g) {
  std::vector<Edge> out;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> starts(g.order());
  std::iota(starts.begin(), starts.end(), 0);
  std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::map<Edge, char> taken;
  for (Vertex s : starts) {
    if (seen[s]) continue;
    std::vector<Vertex> queue{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex v = queue[i];
      for (Vertex w : g.neighbors(v)) {
        Edge e(v, w);
        if (!taken[e]) {
          taken[e] = 1;
          out.push_back(e);
        }
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return out;
}

// Plain backtracking over edges in a fixed order; colors opened in order.
class ColorSearch {
 public:
  ColorSearch(const Graph& g, int k, bool linear, Meter& m)
      : g_(g), k_(k), linear_(linear), m_(m), edges_(bfs_edges(g)), cnt_(g.order(), std::vector<int>(k + 1, 0)) {}

  bool run() { return rec(0, 0); }

 private:
  // Same-colored walk from a; true if it reaches b.
  bool joined(Vertex a, Vertex b, int c) const {
    Vertex prev = -1, cur = a;
    for (;;) {
      if (cur == b) return true;
      Vertex next = -1;
      for (Vertex w : g_.neighbors(cur)) {
        auto it = col_.find(Edge(cur, w));
        if (w != prev && it != col_.end() && it->second == c) next = w;
      }
      if (next < 0) return false;
      prev = cur;
      cur = next;
    }
  }

  bool ok(const Edge& e, int c) const {
    if (!linear_) return cnt_[e.u][c] == 0 && cnt_[e.v][c] == 0;
    if (cnt_[e.u][c] >= 2 || cnt_[e.v][c] >= 2) return false;
    return !(cnt_[e.u][c] == 1 && cnt_[e.v][c] == 1 && joined(e.u, e.v, c));
  }

  bool rec(std::size_t i, int opened) {
    if (i == edges_.size()) return true;
    if (!m_.tick()) return false;
    const Edge e = edges_[i];
    for (int c = 1; c <= std::min(k_, opened + 1); ++c) {
      if (!ok(e, c)) continue;
      col_[e] = c;
      ++cnt_[e.u][c];
      ++cnt_[e.v][c];
      if (rec(i + 1, std::max(opened, c))) return true;
      --cnt_[e.u][c];
      --cnt_[e.v][c];
      col_.erase(e);
      if (m_.over()) return false;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  bool linear_;
  Meter& m_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> cnt_;
  std::map<Edge, int> col_;
};

bool acyclic_kind(const Graph& g, std::span<const Edge> s, RemovalKind kind) {
  SubgraphKind k = classify_subgraph(g, s);
  switch (kind) {
    case RemovalKind::Matching: return k.matching;
    case RemovalKind::LinearForest: return k.linear_forest;
    case RemovalKind::StarForest: return k.star_forest;
  }
  return false;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Found: return "found";
    case Outcome::None: return "none";
    case Outcome::OverBudget: return "over-budget";
  }
  return "?";
}

std::string to_string(RemovalKind k) {
  switch (k) {
    case RemovalKind::Matching: return "matching";
    case RemovalKind::LinearForest: return "linear-forest";
    case RemovalKind::StarForest: return "star-forest";
  }
  return "?";
}

std::optional<RemovalKind> removal_kind_from_string(const std::string& s) {
  for (RemovalKind k : {RemovalKind::Matching, RemovalKind::LinearForest, RemovalKind::StarForest})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

ValueResult brute_chromatic_index(const Graph& g, const SearchBudget& b) {
  if (too_big(g, b)) return {};
  const int delta = g.max_degree();
  if (g.size() == 0) return {Outcome::Found, 0};
  Meter m(b);
  ColorSearch s(g, delta, false, m);
  if (s.run()) return {Outcome::Found, delta};
  if (m.over()) return {};
  return {Outcome::Found, delta + 1};
}

ValueResult brute_linear_arboricity(const Graph& g, const SearchBudget& b) {
  if (too_big(g, b)) return {};
  if (g.size() == 0) return {Outcome::Found, 0};
  Meter m(b);
  for (int k = (g.max_degree() + 1) / 2; k <= static_cast<int>(g.size()); ++k) {
    ColorSearch s(g, k, true, m);
    if (s.run()) return {Outcome::Found, k};
    if (m.over()) return {};
  }
  return {};
}

EdgeSetResult exists_removal_decomposition(const Graph& g, RemovalKind kind, const SearchBudget& b) {
  if (too_big(g, b)) return {};
  const int guard = std::max(b.max_vertices, 1);
  Meter m(b);
  const std::vector<Edge>& es = g.edges();
  std::vector<Edge> removed, kept;
  // Decide each edge in turn; the kept part must stay outerplanar and the
  // removed part of the requested kind.
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (!m.tick()) return false;
    if (i == es.size()) return true;
    const Edge e = es[i];
    kept.push_back(e);
    if (is_outerplanar(g.edge_subgraph(kept), guard) && rec(i + 1)) return true;
    kept.pop_back();
    if (m.over()) return false;
    removed.push_back(e);
    if (acyclic_kind(g, removed, kind) && rec(i + 1)) return true;
    removed.pop_back();
    return false;
  };
  if (rec(0)) {
    std::sort(removed.begin(), removed.end());
    return {Outcome::Found, removed};
  }
  return {m.over() ? Outcome::OverBudget : Outcome::None, {}};
}

PartitionResult exists_k_forest_partition(const Graph& g, int k, const SearchBudget& b) {
  if (k < 1) throw InvalidInput("k must be positive");
  if (too_big(g, b)) return {};
  const int n = g.order();
  if (static_cast<long long>(g.size()) > static_cast<long long>(k) * std::max(n - 1, 0)) return {Outcome::None, {}};
  Meter m(b);
  std::vector<Edge> es = bfs_edges(g);
  std::vector<std::vector<int>> parent(k, std::vector<int>(n));
  for (auto& p : parent) std::iota(p.begin(), p.end(), 0);
  auto find = [&](int f, int v) {
    while (parent[f][v] != v) v = parent[f][v];
    return v;
  };
  std::vector<int> which(es.size(), -1);
  std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int opened) {
    if (i == es.size()) return true;
    if (!m.tick()) return false;
    const Edge e = es[i];
    for (int f = 0; f < std::min(k, opened + 1); ++f) {
      int a = find(f, e.u), c = find(f, e.v);
      if (a == c) continue;
      parent[f][a] = c;
      which[i] = f;
      if (rec(i + 1, std::max(opened, f + 1))) return true;
      parent[f][a] = a;
      if (m.over()) return false;
    }
    return false;
  };
  if (!rec(0, 0)) return {m.over() ? Outcome::OverBudget : Outcome::None, {}};
  PartitionResult out{Outcome::Found, {}};
  for (int f = 0; f < k; ++f) {
    Part p{PartKind::Forest, {}};
    for (std::size_t i = 0; i < es.size(); ++i)
      if (which[i] == f) p.edges.push_back(es[i]);
    std::sort(p.edges.begin(), p.edges.end());
    if (!p.edges.empty()) out.decomposition.parts.push_back(std::move(p));
  }
  return out;
}

}  // namespace pog
