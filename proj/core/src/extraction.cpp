#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "pog/decompose.hpp"

namespace pog {

namespace {

// A hamiltonian drawing: `cyc` is the boundary in clockwise order, `edges` the
// edge set (possibly with helper edges on the boundary).
struct Instance {
  std::vector<Vertex> cyc;
  std::set<Edge> edges;
};

class Extractor {
 public:
  explicit Extractor(int n) : pos_(n, -1) {}

  // Forest of crossed chords with d_T(y) = 0 and both circular neighbours of y
  // of T-degree <= 1 (as leaves or K2 ends for the linear forest; only as roots
  // for the star forest, which the same recursion yields).
  std::vector<Edge> run(const Instance& in, Vertex y) {
    const int m = static_cast<int>(in.cyc.size());
    place(in);
    if (m <= 4) return base(in, y);
    // Recursion re-places vertices; restore this instance's positions after.
    auto recurse = [&](const Instance& sub, Vertex s) {
      auto t = run(sub, s);
      place(in);
      return t;
    };

    const int iy = pos_[y];
    const Vertex z = in.cyc[(iy + 1) % m];
    const Vertex x = in.cyc[(iy + m - 1) % m];
    std::vector<Vertex> nb;
    for (const Edge& e : in.edges)
      if (e.has(y)) nb.push_back(e.other(y));
    const int dy = static_cast<int>(nb.size());
    const bool xz = in.edges.count({x, z}) > 0;

    if (dy == 2) return recurse(induced(in, arc(in, z, x), {{x, z}}), x);

    if (dy == 3 && xz) {
      Vertex w = -1;
      for (Vertex v : nb)
        if (v != x && v != z) w = v;
      std::vector<Edge> t;
      const bool left_empty = next(in, z) == w;
      const bool right_empty = next(in, w) == x;
      if (!left_empty) append(t, recurse(induced(in, arc(in, z, w), {{z, w}}), z));
      if (!right_empty) append(t, recurse(induced(in, arc(in, w, x), {{w, x}}), x));
      t.emplace_back(x, z);
      return t;
    }
    if (xz) throw std::logic_error("chord xz crossed by more than one edge at y");

    // Second neighbour of y clockwise after z.
    Vertex y2 = -1;
    for (int k = 2; k < m && y2 < 0; ++k) {
      Vertex v = in.cyc[(iy + k) % m];
      if (in.edges.count({y, v})) y2 = v;
    }
    const Edge yy2(y, y2);
    std::optional<Edge> partner;
    for (const Edge& e : in.edges)
      if (interleaved(pos_, yy2, e)) partner = e;

    std::vector<Edge> t;
    if (!partner) {
      append(t, recurse(induced(in, arc(in, y, y2), {}), y));
      append(t, recurse(induced(in, arc(in, y2, y), {}), y));
      return t;
    }
    // Endpoint of the partner on the y..y2 side is the left one.
    auto between = [&](Vertex a, Vertex b, Vertex v) {
      int da = (pos_[v] - pos_[a] + m) % m;
      int db = (pos_[b] - pos_[a] + m) % m;
      return da > 0 && da < db;
    };
    const Vertex left = between(y, y2, partner->u) ? partner->u : partner->v;
    const Vertex right = partner->other(left);
    const Edge hl(y, left), hr(y, right);

    if (left != z) append(t, recurse(induced(in, arc(in, y, left), {hl}), y));
    {
      Instance mid = induced(in, with_front(y, arc(in, left, right)), {hl, hr});
      append(t, recurse(mid, y));
    }
    if (right != x) append(t, recurse(induced(in, arc(in, right, y), {hr}), y));
    return t;
  }

 private:
  void place(const Instance& in) {
    for (int i = 0; i < static_cast<int>(in.cyc.size()); ++i) pos_[in.cyc[i]] = i;
  }

  std::vector<Edge> base(const Instance& in, Vertex y) {
    std::vector<Edge> es(in.edges.begin(), in.edges.end());
    std::set<Edge> t;
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j)
        if (interleaved(pos_, es[i], es[j])) {
          if (!es[i].has(y)) t.insert(es[i]);
          if (!es[j].has(y)) t.insert(es[j]);
        }
    return {t.begin(), t.end()};
  }

  Vertex next(const Instance& in, Vertex v) const {
    return in.cyc[(pos_[v] + 1) % in.cyc.size()];
  }

  // Clockwise from a to b, both included.
  std::vector<Vertex> arc(const Instance& in, Vertex a, Vertex b) const {
    const int m = static_cast<int>(in.cyc.size());
    std::vector<Vertex> out;
    for (int i = pos_[a];; i = (i + 1) % m) {
      out.push_back(in.cyc[i]);
      if (in.cyc[i] == b) break;
    }
    return out;
  }

  static std::vector<Vertex> with_front(Vertex y, std::vector<Vertex> vs) {
    vs.insert(vs.begin(), y);
    return vs;
  }

  Instance induced(const Instance& in, std::vector<Vertex> vs, std::initializer_list<Edge> extra) const {
    Instance out;
    std::set<Vertex> keep(vs.begin(), vs.end());
    for (const Edge& e : in.edges)
      if (keep.count(e.u) && keep.count(e.v)) out.edges.insert(e);
    for (const Edge& e : extra) out.edges.insert(e);
    out.cyc = std::move(vs);
    return out;
  }

  static void append(std::vector<Edge>& t, const std::vector<Edge>& more) {
    t.insert(t.end(), more.begin(), more.end());
  }

  std::vector<int> pos_;
};

// One chord from every crossing pair such that the picks form a star forest:
// each picked edge keeps an endpoint of degree one. Vertices in `banned` get
// no pick; vertices in `rooted` never end up as a leaf hanging off a centre.
// Adding edges only raises degrees, so a violation never goes away and can
// prune. Pairs whose chords share no vertex are solved separately.
class StarPicker {
 public:
  StarPicker(int n, const std::vector<CrossingPair>& pairs, const std::set<Vertex>& banned,
             const std::set<Vertex>& rooted, long max_nodes)
      : deg_(n, 0), at_(n), rooted_(n, false), budget_(max_nodes) {
    for (Vertex r : rooted) rooted_[r] = true;
    for (const auto& p : pairs) {
      std::vector<Edge> opts;
      for (const Edge& e : {p.first, p.second})
        if (!banned.count(e.u) && !banned.count(e.v)) opts.push_back(e);
      options_.push_back(opts);
    }
  }

  std::optional<std::vector<Edge>> run() {
    const int k = static_cast<int>(options_.size());
    for (const auto& o : options_)
      if (o.empty()) return std::nullopt;
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    std::vector<int> owner(deg_.size(), -1);
    for (int i = 0; i < k; ++i)
      for (const Edge& e : options_[i])
        for (Vertex v : {e.u, e.v}) {
          if (owner[v] >= 0) parent[find(i)] = find(owner[v]);
          owner[v] = i;
        }
    std::vector<std::vector<int>> groups(k);
    for (int i = 0; i < k; ++i) groups[find(i)].push_back(i);

    chosen_.assign(k, -1);
    for (const auto& g : groups) {
      if (g.empty()) continue;
      nodes_ = 0;
      if (!solve(g)) return std::nullopt;
    }
    std::vector<Edge> out;
    for (int i = 0; i < k; ++i) out.push_back(options_[i][chosen_[i]]);
    return out;
  }

 private:
  bool fits(const Edge& e) const {
    const int du = deg_[e.u] + 1, dv = deg_[e.v] + 1;
    if (du > 1 && dv > 1) return false;
    if (rooted_[e.u] && du == 1 && dv > 1) return false;
    if (rooted_[e.v] && dv == 1 && du > 1) return false;
    for (Vertex a : {e.u, e.v}) {
      if (deg_[a] == 0) continue;
      // a becomes a centre: every current neighbour must stay a free leaf
      for (Vertex w : at_[a])
        if (deg_[w] != 1 || rooted_[w]) return false;
    }
    return true;
  }

  void add(const Edge& e) {
    ++deg_[e.u], ++deg_[e.v];
    at_[e.u].push_back(e.v), at_[e.v].push_back(e.u);
  }
  void remove(const Edge& e) {
    --deg_[e.u], --deg_[e.v];
    at_[e.u].pop_back(), at_[e.v].pop_back();
  }

  bool solve(const std::vector<int>& group) {
    if (++nodes_ > budget_) throw GuardExceeded("star forest search over budget");
    // Most constrained open pair first; a pair with no fitting chord fails now.
    int best = -1, best_count = 3;
    for (int i : group) {
      if (chosen_[i] >= 0) continue;
      int c = 0;
      for (const Edge& e : options_[i]) c += fits(e);
      if (c == 0) return false;
      if (c < best_count) best = i, best_count = c;
    }
    if (best < 0) return true;
    for (int j = 0; j < static_cast<int>(options_[best].size()); ++j) {
      const Edge& e = options_[best][j];
      if (!fits(e)) continue;
      add(e);
      chosen_[best] = j;
      if (solve(group)) return true;
      chosen_[best] = -1;
      remove(e);
    }
    return false;
  }

  std::vector<std::vector<Edge>> options_;
  std::vector<int> chosen_;
  std::vector<int> deg_;
  std::vector<std::vector<Vertex>> at_;
  std::vector<bool> rooted_;
  long budget_;
  long nodes_ = 0;
};

void check_extraction_input(const Diagram& d, Vertex y, Vertex x, Vertex z) {
  Report r = validate(d);
  if (!r.valid) throw InvalidInput("invalid diagram: " + r.violations.front());
  const auto nonisolated = d.graph.non_isolated();
  if (d.blocks.size() != 1 || !d.blocks[0].closed || d.blocks[0].order.size() < 3 ||
      d.blocks[0].order.size() != nonisolated.size())
    throw InvalidInput("extraction needs a single closed block");
  const auto& order = d.blocks[0].order;
  const int m = static_cast<int>(order.size());
  auto it = std::find(order.begin(), order.end(), y);
  if (it == order.end()) throw InvalidInput("y is not on the boundary");
  const int iy = static_cast<int>(it - order.begin());
  const Vertex succ = order[(iy + 1) % m], pred = order[(iy + m - 1) % m];
  if (!((x == pred && z == succ) || (x == succ && z == pred)))
    throw InvalidInput("x and z must be the boundary neighbours of y");
}

ExtractionResult result(const Diagram& d, std::vector<Edge> t) {
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  ExtractionResult out;
  out.forest = t;
  out.remainder = Diagram{d.graph.minus_edges(t), d.blocks};
  return out;
}

}  // namespace

ExtractionResult extract_linear_forest(const Diagram& d, Vertex y, Vertex x, Vertex z) {
  check_extraction_input(d, y, x, z);
  const auto& order = d.blocks[0].order;
  Instance in{order, {d.graph.edges().begin(), d.graph.edges().end()}};
  Extractor ex(d.graph.order());
  return result(d, ex.run(in, y));
}

ExtractionResult extract_star_forest(const Diagram& d, Vertex y, Vertex x, Vertex z, long max_nodes) {
  check_extraction_input(d, y, x, z);
  StarPicker picker(d.graph.order(), crossing_pairs(d), {y}, {x, z}, max_nodes);
  auto t = picker.run();
  if (!t) throw NoSolution("no star forest of crossed chords avoids y with x and z as roots");
  return result(d, *t);
}

Decomposition cover_outerplanar_plus(const Diagram& d, PartKind kind) {
  if (kind != PartKind::LinearForest && kind != PartKind::StarForest)
    throw InvalidInput("cover kind must be linear-forest or star-forest");
  auto q = quasi_hamiltonize(d);
  const Graph& h = q.diagram.graph;
  const int n = h.order();

  // Root each block tree; every other block takes its parent cut vertex as y.
  const auto& bl = q.diagram.blocks;
  std::vector<std::vector<int>> at(n);
  for (std::size_t i = 0; i < bl.size(); ++i)
    for (Vertex v : bl[i].order) at[v].push_back(static_cast<int>(i));
  std::vector<Vertex> special(bl.size(), -1);
  for (std::size_t root = 0; root < bl.size(); ++root) {
    if (special[root] >= 0) continue;
    special[root] = bl[root].order.front();
    std::vector<int> todo{static_cast<int>(root)};
    while (!todo.empty()) {
      int b = todo.back();
      todo.pop_back();
      for (Vertex v : bl[b].order)
        for (int c : at[v])
          if (special[c] < 0) {
            special[c] = v;
            todo.push_back(c);
          }
    }
  }

  std::set<Edge> forest;
  if (kind == PartKind::StarForest) {
    // Block induction with the cut vertex as y breaks down for stars, so all
    // crossing pairs are settled at once.
    StarPicker picker(n, crossing_pairs(q.diagram), {}, {}, 2'000'000);
    auto t = picker.run();
    if (!t) throw NoSolution("no star forest meets every crossing pair");
    forest.insert(t->begin(), t->end());
  }
  Extractor ex(n);
  for (std::size_t i = 0; kind == PartKind::LinearForest && i < bl.size(); ++i) {
    if (bl[i].order.size() < 4) continue;
    std::set<Vertex> vs(bl[i].order.begin(), bl[i].order.end());
    Instance in{bl[i].order, {}};
    for (const Edge& e : h.edges())
      if (vs.count(e.u) && vs.count(e.v)) in.edges.insert(e);
    auto t = ex.run(in, special[i]);
    forest.insert(t.begin(), t.end());
  }
  for (const Edge& e : q.added)
    if (forest.count(e)) throw std::logic_error("helper edge entered the forest");

  Decomposition out;
  out.parts.push_back({kind, {forest.begin(), forest.end()}});
  std::vector<Edge> rest;
  for (const Edge& e : d.graph.edges())
    if (!forest.count(e)) rest.push_back(e);
  out.parts.push_back({PartKind::OuterplanarRemainder, rest});
  return out;
}

Decomposition cover_outerplanar_plus(const Graph& g, PartKind kind) {
  auto d = recognize(g);
  if (!d) throw NotPseudoOuterplanar();
  return cover_outerplanar_plus(*d, kind);
}

}  // namespace pog
