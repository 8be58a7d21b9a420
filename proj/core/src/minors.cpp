#include "pog/minors.hpp"

#include <deque>
#include <set>

namespace pog {

namespace {

void check_guard(const Graph& g, int guard) {
  if (static_cast<int>(g.non_isolated().size()) > guard)
    throw GuardExceeded("too large for exact minor search");
}

// Deleting vertices of degree <= 1 and suppressing vertices of degree 2 empties
// the graph exactly when it has no K4 minor.
bool k4_minor(const Graph& g) {
  const int n = g.order();
  std::vector<std::set<Vertex>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::deque<Vertex> todo;
  for (Vertex v = 0; v < n; ++v)
    if (!adj[v].empty() && adj[v].size() <= 2) todo.push_back(v);
  while (!todo.empty()) {
    Vertex v = todo.front();
    todo.pop_front();
    if (adj[v].empty() || adj[v].size() > 2) continue;
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    for (Vertex w : nb) adj[w].erase(v);
    adj[v].clear();
    if (nb.size() == 2) {
      adj[nb[0]].insert(nb[1]);
      adj[nb[1]].insert(nb[0]);
    }
    for (Vertex w : nb)
      if (!adj[w].empty() && adj[w].size() <= 2) todo.push_back(w);
  }
  for (Vertex v = 0; v < n; ++v)
    if (!adj[v].empty()) return true;
  return false;
}

// Number of internally vertex-disjoint s-t paths avoiding the edge st, capped.
int disjoint_paths(const Graph& g, Vertex s, Vertex t, int cap) {
  const int n = g.order();
  // Vertex v splits into in = 2v, out = 2v+1 with unit capacity between them.
  const int nodes = 2 * n;
  std::vector<std::vector<int>> arcs(nodes);
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> pool;
  auto add = [&](int a, int b, int c) {
    arcs[a].push_back(static_cast<int>(pool.size()));
    pool.push_back({b, c});
    arcs[b].push_back(static_cast<int>(pool.size()));
    pool.push_back({a, 0});
  };
  const int big = cap + 1;
  for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (const Edge& e : g.edges()) {
    if (e == Edge(s, t)) continue;
    add(2 * e.u + 1, 2 * e.v, 1);
    add(2 * e.v + 1, 2 * e.u, 1);
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  while (flow < cap) {
    std::vector<int> via(nodes, -1);
    std::deque<int> q{source};
    std::vector<char> seen(nodes, 0);
    seen[source] = 1;
    while (!q.empty() && !seen[sink]) {
      int a = q.front();
      q.pop_front();
      for (int id : arcs[a]) {
        const Arc& arc = pool[id];
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = 1;
          via[arc.to] = id;
          q.push_back(arc.to);
        }
      }
    }
    if (!seen[sink]) break;
    for (int x = sink; x != source;) {
      int id = via[x];
      pool[id].cap -= 1;
      pool[id ^ 1].cap += 1;
      x = pool[id ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

bool k23_minor(const Graph& g) {
  const int n = g.order();
  for (Vertex s = 0; s < n; ++s) {
    if (g.degree(s) < 3) continue;
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.degree(t) < 3) continue;
      if (disjoint_paths(g, s, t, 3) >= 3) return true;
    }
  }
  return false;
}

}  // namespace

bool has_minor(const Graph& g, MinorPattern pattern, int guard) {
  check_guard(g, guard);
  return pattern == MinorPattern::K4 ? k4_minor(g) : k23_minor(g);
}

bool is_outerplanar(const Graph& g, int guard) {
  check_guard(g, guard);
  return !k4_minor(g) && !k23_minor(g);
}

}  // namespace pog
