#include <set>
#include <stdexcept>

#include "pog/decompose.hpp"

namespace pog {

namespace {

struct Piece {
  PieceKind kind;
  std::vector<Vertex> removed;
  Edge glue;
};

// A degree-2 vertex whose two circular neighbours are adjacent (K3), else two
// consecutive degree-3 vertices spanning a K4 with their outer neighbours.
std::optional<Piece> find_piece(const Graph& g, const std::vector<Vertex>& order) {
  const int m = static_cast<int>(order.size());
  if (m < 3) throw InvalidInput("atomic");
  auto at = [&](int i) { return order[((i % m) + m) % m]; };

  std::optional<Piece> best;
  for (int i = 0; i < m; ++i) {
    Vertex a = at(i - 1), v = at(i), b = at(i + 1);
    if (g.degree(v) == 2 && g.has_edge(a, v) && g.has_edge(v, b) && g.has_edge(a, b))
      if (!best || v < best->removed[0]) best = Piece{PieceKind::K3, {v}, Edge(a, b)};
  }
  if (best || m < 4) return best;
  for (int i = 0; i < m; ++i) {
    Vertex a = at(i), p = at(i + 1), q = at(i + 2), b = at(i + 3);
    if (g.degree(p) != 3 || g.degree(q) != 3) continue;
    if (!(g.has_edge(a, p) && g.has_edge(a, q) && g.has_edge(a, b) && g.has_edge(p, q) &&
          g.has_edge(p, b) && g.has_edge(q, b)))
      continue;
    std::vector<Vertex> pq{std::min(p, q), std::max(p, q)};
    if (!best || pq < best->removed) best = Piece{PieceKind::K4, pq, Edge(a, b)};
  }
  return best;
}

void check_single_block(const Diagram& d) {
  Report r = validate(d);
  if (!r.valid) throw InvalidInput("invalid diagram: " + r.violations.front());
  const auto nonisolated = d.graph.non_isolated();
  if (nonisolated.size() < 3) throw InvalidInput("atomic");
  if (d.blocks.size() != 1 || !d.blocks[0].closed) throw InvalidInput("peeling needs a single closed block");
}

}  // namespace

PeelStep peel_maximal(const Diagram& d) {
  check_single_block(d);
  const auto& order = d.blocks[0].order;
  auto piece = find_piece(d.graph, order);
  if (!piece) throw InvalidInput("no K3 or K4 piece: drawing is not maximal");
  PeelStep step;
  step.kind = piece->kind;
  step.removed = piece->removed;
  step.glue = piece->glue;
  Graph smaller = d.graph.minus_vertices(piece->removed);
  std::vector<Vertex> rest;
  for (Vertex v : order)
    if (std::find(piece->removed.begin(), piece->removed.end(), v) == piece->removed.end()) rest.push_back(v);
  step.smaller = diagram_from_order(smaller, rest);
  return step;
}

Decomposition two_forests_plus_matching(const Diagram& d) {
  Report r = validate(d);
  if (!r.valid) throw InvalidInput("invalid diagram: " + r.violations.front());
  Decomposition out;
  out.parts = {{PartKind::Forest, {}}, {PartKind::Forest, {}}, {PartKind::Matching, {}}};
  if (d.graph.size() == 0) return out;

  // Work on the fixed-order completion of the whole graph: one closed block in
  // which every peel is a K3 or K4 hanging on a boundary edge.
  Graph w = d.graph;
  std::vector<Vertex> order = spliced_order(d);
  fill_at_fixed_order(w, order);

  std::vector<Piece> steps;
  while (order.size() >= 3) {
    auto piece = find_piece(w, order);
    if (!piece) {
      fill_at_fixed_order(w, order);
      piece = find_piece(w, order);
    }
    if (!piece) throw std::logic_error("completed drawing has no K3 or K4 piece");
    w = w.minus_vertices(piece->removed);
    std::erase_if(order, [&](Vertex v) {
      return std::find(piece->removed.begin(), piece->removed.end(), v) != piece->removed.end();
    });
    steps.push_back(*piece);
  }

  std::set<Edge> f1, f2, m;
  if (order.size() == 2) f1.insert(Edge(order[0], order[1]));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const Vertex x = it->glue.u, y = it->glue.v;
    if (it->kind == PieceKind::K3) {
      const Vertex z = it->removed[0];
      f1.insert({x, z});
      f2.insert({y, z});
    } else {
      const Vertex u = it->removed[0], v = it->removed[1];
      f1.insert({x, u});
      f1.insert({x, v});
      f2.insert({y, u});
      f2.insert({y, v});
      m.insert({u, v});
    }
  }
  // Restriction to E(g): subgraphs keep their kind.
  auto restrict = [&](const std::set<Edge>& s, std::vector<Edge>& dst) {
    for (const Edge& e : s)
      if (d.graph.has_edge(e)) dst.push_back(e);
  };
  restrict(f1, out.parts[0].edges);
  restrict(f2, out.parts[1].edges);
  restrict(m, out.parts[2].edges);
  return out;
}

Decomposition two_forests_plus_matching(const Graph& g) {
  auto d = recognize(g);
  if (!d) throw NotPseudoOuterplanar();
  return two_forests_plus_matching(*d);
}

}  // namespace pog
