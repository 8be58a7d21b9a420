#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "pog/colorings.hpp"

namespace pog {

namespace {

constexpr long long kLocalBudget = 200000;
constexpr long long kGlobalBudget = 50000000;

using Role = std::pair<std::string, std::string>;

// Tabulated extension: role edge -> normalized color. Normalized colors are
// mapped injectively onto the palette so that the result is proper.
struct Table {
  std::vector<std::pair<Role, int>> entries;
};

Table table(std::initializer_list<std::pair<Role, int>> e) { return Table{e}; }

class Colorer {
 public:
  explicit Colorer(int k) : k_(k) {}

  void color(const Graph& g, const std::vector<Vertex>& order) {
    if (g.size() == 0) return;
    if (g.max_degree() < k_) return vizing_base(g);
    if (low_edge(g, order)) return;
    BlockStructure bs = blocks(g);
    if (bs.blocks.size() > 1) return block_split(g, bs, order);
    for (ConfigId id : coloring_patterns()) {
      auto m = match_pattern(g, id);
      if (m && reduce(g, order, *m)) return;
    }
    exact(g, {}, true, std::nullopt);
  }

  std::map<Edge, int> colors;
  ColorTrace trace;
  bool diagnostic = false;

 private:
  int get(const Edge& e) const {
    auto it = colors.find(e);
    return it == colors.end() ? 0 : it->second;
  }

  void set(std::vector<ColorWrite>& w, const Edge& e, int c) {
    if (c == 0)
      colors.erase(e);
    else
      colors[e] = c;
    w.push_back({e, c});
  }

  void vizing_base(const Graph& g) {
    TraceStep s;
    s.kind = StepKind::VizingBase;
    s.vertices = g.non_isolated();
    for (const auto& [e, c] : vizing_color(g).colors) set(s.writes, e, c);
    trace.steps.push_back(std::move(s));
  }

  bool low_edge(const Graph& g, const std::vector<Vertex>& order) {
    for (const Edge& e : g.edges()) {
      if (g.degree(e.u) + g.degree(e.v) > k_ + 1) continue;
      color(g.minus_edge(e), order);
      std::vector<char> used(k_ + 1, 0);
      for (Vertex x : {e.u, e.v})
        for (Vertex y : g.neighbors(x))
          if (y != e.other(x)) used[get(Edge(x, y))] = 1;
      int c = 1;
      while (c <= k_ && used[c]) ++c;
      if (c > k_) throw std::logic_error("no free color at a low edge");
      TraceStep s;
      s.kind = StepKind::LowEdgeDegree;
      s.vertices = {e.u, e.v};
      s.method = "table";
      set(s.writes, e, c);
      trace.steps.push_back(std::move(s));
      return true;
    }
    return false;
  }

  void block_split(const Graph& g, const BlockStructure& bs, const std::vector<Vertex>& order) {
    const auto& bl = bs.blocks;
    for (const Block& b : bl) color(g.edge_subgraph(b.edges), order);

    TraceStep s;
    s.kind = StepKind::BlockSplit;
    s.vertices = bs.cut_vertices;
    s.method = "table";
    std::vector<char> done(bl.size(), 0);
    std::vector<std::set<int>> at(g.order());
    auto shares = [&](std::size_t a, std::size_t b) -> Vertex {
      for (Vertex v : bl[a].vertices)
        if (std::binary_search(bl[b].vertices.begin(), bl[b].vertices.end(), v)) return v;
      return -1;
    };
    for (std::size_t root = 0; root < bl.size(); ++root) {
      if (done[root]) continue;
      std::deque<std::pair<std::size_t, Vertex>> q{{root, -1}};
      done[root] = 1;
      while (!q.empty()) {
        auto [b, cut] = q.front();
        q.pop_front();
        if (cut >= 0) rotate(s, bl[b], cut, at[cut]);
        for (const Edge& e : bl[b].edges) {
          at[e.u].insert(get(e));
          at[e.v].insert(get(e));
        }
        for (std::size_t o = 0; o < bl.size(); ++o) {
          if (done[o]) continue;
          Vertex c = shares(b, o);
          if (c < 0) continue;
          done[o] = 1;
          q.push_back({o, c});
        }
      }
    }
    trace.steps.push_back(std::move(s));
  }

  // Permute the block's palette so its colors at `cut` avoid `taken`.
  void rotate(TraceStep& s, const Block& b, Vertex cut, const std::set<int>& taken) {
    std::vector<int> mine;
    for (const Edge& e : b.edges)
      if (e.has(cut)) mine.push_back(get(e));
    std::sort(mine.begin(), mine.end());
    std::vector<int> perm(k_ + 1, 0);
    std::vector<char> image(k_ + 1, 0);
    int t = 1;
    for (int c : mine) {
      while (t <= k_ && taken.count(t)) ++t;
      if (t > k_) throw std::logic_error("palette rotation overflow");
      perm[c] = t;
      image[t] = 1;
      ++t;
    }
    int free_t = 1;
    for (int c = 1; c <= k_; ++c) {
      if (perm[c]) continue;
      while (image[free_t]) ++free_t;
      perm[c] = free_t;
      image[free_t] = 1;
    }
    for (const Edge& e : b.edges) {
      int c = get(e);
      if (perm[c] != c) set(s.writes, e, perm[c]);
    }
  }

  // Fits one table; returns the concrete colors or nothing.
  std::optional<std::map<Edge, int>> fit(const Graph& g, const std::vector<std::pair<Edge, int>>& t) const {
    std::set<Edge> in_table;
    int top = 0;
    for (const auto& [e, c] : t) {
      in_table.insert(e);
      top = std::max(top, c);
    }
    if (top > k_) return std::nullopt;
    auto fixed = [&](Vertex v) {
      std::set<int> s;
      for (Vertex w : g.neighbors(v))
        if (!in_table.count(Edge(v, w))) s.insert(get(Edge(v, w)));
      return s;
    };
    std::map<Vertex, std::set<int>> fx;
    for (const auto& [e, c] : t) {
      if (!fx.count(e.u)) fx[e.u] = fixed(e.u);
      if (!fx.count(e.v)) fx[e.v] = fixed(e.v);
    }
    std::vector<int> sigma(top + 1, 0);
    std::vector<char> used(k_ + 1, 0);
    std::function<bool(int)> place = [&](int c) {
      if (c > top) return true;
      for (int a = 1; a <= k_; ++a) {
        if (used[a]) continue;
        bool ok = true;
        for (const auto& [e, n] : t)
          if (n == c && (fx[e.u].count(a) || fx[e.v].count(a))) ok = false;
        if (!ok) continue;
        sigma[c] = a;
        used[a] = 1;
        if (place(c + 1)) return true;
        used[a] = 0;
      }
      return false;
    };
    if (!place(1)) return std::nullopt;
    std::map<Edge, int> out;
    for (const auto& [e, c] : t) out[e] = sigma[c];
    // Tables are proper by construction; recheck anyway.
    std::map<Vertex, std::set<int>> seen;
    for (const auto& [e, c] : out)
      if (!seen[e.u].insert(c).second || !seen[e.v].insert(c).second) return std::nullopt;
    return out;
  }

  struct Reduction {
    Graph smaller;
    std::vector<Edge> added;               // erased after the recursion
    std::optional<std::pair<Edge, Edge>> moved;  // color of first moves to second
    std::vector<Table> tables;
  };

  std::optional<Reduction> plan(const Graph& g, const std::vector<Vertex>& order, const ConfigurationMatch& m) const {
    auto r = [&](const char* name) { return m.role(name); };
    auto without = [&](std::initializer_list<const char*> names) {
      std::vector<Vertex> vs;
      for (const char* n : names) vs.push_back(r(n));
      return g.minus_vertices(vs);
    };
    auto fits_layout = [&](const Graph& h) { return h.max_degree() <= k_ && valid_on_order(h, order); };
    Reduction red;
    switch (m.id) {
      case ConfigId::G3:
        red.smaller = without({"u", "v"});
        red.tables = {table({{{"u", "x"}, 1}, {{"v", "y"}, 1}, {{"u", "y"}, 2}, {{"v", "x"}, 2}}),
                      table({{{"u", "x"}, 1}, {{"v", "x"}, 2}, {{"v", "y"}, 3}, {{"u", "y"}, 2}}),
                      table({{{"u", "x"}, 1}, {{"v", "x"}, 2}, {{"v", "y"}, 3}, {{"u", "y"}, 4}})};
        return red;
      case ConfigId::G4:
        if (k_ != 4) return std::nullopt;
        red.smaller = without({"x", "y", "u"});
        red.tables = {table({{{"u", "y"}, 1},
                             {{"u", "x"}, 2},
                             {{"u", "w"}, 3},
                             {{"v", "x"}, 3},
                             {{"u", "v"}, 4},
                             {{"w", "y"}, 4}}),
                      table({{{"u", "w"}, 1},
                             {{"u", "x"}, 2},
                             {{"v", "x"}, 3},
                             {{"u", "y"}, 3},
                             {{"u", "v"}, 4},
                             {{"w", "y"}, 2}}),
                      table({{{"u", "w"}, 1},
                             {{"u", "x"}, 2},
                             {{"v", "x"}, 3},
                             {{"u", "y"}, 3},
                             {{"u", "v"}, 4},
                             {{"w", "y"}, 4}})};
        return red;
      case ConfigId::G5:
        if (k_ != 4) return std::nullopt;
        red.smaller = without({"u"});
        red.tables = {table({{{"u", "v"}, 1}, {{"u", "w"}, 2}}),
                      table({{{"w", "x"}, 3}, {{"v", "w"}, 4}, {{"u", "v"}, 3}, {{"u", "w"}, 2}}),
                      table({{{"w", "x"}, 4}, {{"u", "v"}, 4}, {{"u", "w"}, 2}})};
        return red;
      case ConfigId::G6: {
        if (k_ != 4) return std::nullopt;
        Vertex u = r("u"), x0 = r("x0"), y0 = r("y0");
        if (g.has_edge(x0, y0)) {
          std::vector<Edge> gone{Edge(x0, y0)};
          red.smaller = without({"u", "v"}).minus_edges(gone);
          red.tables = {table({{{"u", "v"}, 1},
                               {{"x0", "y0"}, 2},
                               {{"u", "x0"}, 3},
                               {{"v", "y0"}, 3},
                               {{"v", "x0"}, 4},
                               {{"u", "y0"}, 4}}),
                        table({{{"v", "y0"}, 1},
                               {{"u", "x0"}, 2},
                               {{"u", "v"}, 3},
                               {{"x0", "y0"}, 3},
                               {{"v", "x0"}, 4},
                               {{"u", "y0"}, 4}})};
          return red;
        }
        if (g.degree(x0) == 3 || g.degree(y0) == 3) {
          const bool swap = g.degree(x0) != 3;
          const char* a = swap ? "y0" : "x0";
          red.smaller = g.minus_edge(Edge(u, swap ? y0 : x0));
          red.tables = {table({{{"u", a}, 1}}), table({{{"v", a}, 1}, {{"u", a}, 2}})};
          return red;
        }
        Graph h = without({"u", "v"}).plus_edge(Edge(x0, y0));
        if (!fits_layout(h)) return std::nullopt;
        red.smaller = h;
        red.added = {Edge(x0, y0)};
        red.tables = {table({{{"u", "v"}, 1}, {{"v", "y0"}, 2}, {{"u", "x0"}, 3}, {{"v", "x0"}, 4}, {{"u", "y0"}, 4}}),
                      table({{{"u", "v"}, 1}, {{"v", "y0"}, 3}, {{"u", "x0"}, 3}, {{"v", "x0"}, 4}, {{"u", "y0"}, 4}})};
        return red;
      }
      case ConfigId::G12: {
        if (k_ != 4) return std::nullopt;
        Vertex u = r("u"), v = r("v"), x = r("x"), y = r("y");
        if (g.has_edge(x, y)) {
          // Contract y into x: y's outside edge is drawn from x instead.
          std::vector<Edge> gone{Edge(x, y)};
          Graph h = without({"u", "v", "w"}).minus_edges(gone);
          std::vector<Vertex> outside;
          for (Vertex t : h.neighbors(y)) outside.push_back(t);
          if (outside.size() > 1) return std::nullopt;
          // A common outside neighbour already separates the two colors.
          if (outside.size() == 1 && !h.has_edge(x, outside[0])) {
            Vertex y1 = outside[0];
            std::vector<Edge> yy{Edge(y, y1)};
            h = h.minus_edges(yy).plus_edge(Edge(x, y1));
            if (!fits_layout(h)) return std::nullopt;
            red.moved = std::make_pair(Edge(x, y1), Edge(y, y1));
          }
          red.smaller = h;
          red.tables = {table({{{"u", "w"}, 1},
                               {{"v", "y"}, 1},
                               {{"u", "v"}, 2},
                               {{"w", "x"}, 2},
                               {{"v", "w"}, 3},
                               {{"x", "y"}, 3},
                               {{"v", "x"}, 4},
                               {{"w", "y"}, 4}})};
          return red;
        }
        if (g.degree(x) == 3 || g.degree(y) == 3) {
          const char* a = g.degree(x) == 3 ? "x" : "y";
          red.smaller = g.minus_edge(Edge(u, v));
          red.tables = {table({{{"u", "v"}, 1}}),
                        table({{{"v", a}, 2}, {{"u", "w"}, 2}, {{"v", "w"}, 1}, {{"u", "v"}, 4}}),
                        table({{{"v", a}, 1}, {{"u", "v"}, 4}})};
          return red;
        }
        std::vector<Edge> extra{Edge(x, y), Edge(u, x), Edge(u, y)};
        Graph h = without({"v", "w"}).plus_edges(extra);
        if (!fits_layout(h)) return std::nullopt;
        red.smaller = h;
        red.added = extra;
        red.tables = {table({{{"u", "v"}, 1},
                             {{"w", "y"}, 1},
                             {{"v", "w"}, 2},
                             {{"u", "w"}, 3},
                             {{"v", "x"}, 3},
                             {{"w", "x"}, 4},
                             {{"v", "y"}, 4}})};
        return red;
      }
      case ConfigId::G13:
        if (k_ != 4) return std::nullopt;
        red.smaller = without({"u", "v", "w"});
        red.tables = {table({{{"v", "w"}, 1},
                             {{"u", "v"}, 2},
                             {{"w", "x"}, 2},
                             {{"v", "x"}, 3},
                             {{"w", "y"}, 3},
                             {{"u", "x"}, 4},
                             {{"v", "y"}, 4}}),
                      table({{{"v", "y"}, 1},
                             {{"u", "x"}, 2},
                             {{"v", "w"}, 2},
                             {{"u", "v"}, 3},
                             {{"w", "x"}, 3},
                             {{"v", "x"}, 4},
                             {{"w", "y"}, 4}})};
        return red;
      case ConfigId::G16:
        if (k_ != 4) return std::nullopt;
        red.smaller = without({"u", "v", "w", "z"});
        red.tables = {table({{{"v", "w"}, 1},
                             {{"u", "x"}, 2},
                             {{"v", "z"}, 2},
                             {{"w", "y"}, 2},
                             {{"w", "x"}, 3},
                             {{"v", "y"}, 3},
                             {{"u", "w"}, 4},
                             {{"v", "x"}, 4},
                             {{"y", "z"}, 4}}),
                      table({{{"w", "y"}, 1},
                             {{"v", "z"}, 1},
                             {{"v", "x"}, 2},
                             {{"u", "w"}, 2},
                             {{"u", "x"}, 3},
                             {{"v", "w"}, 3},
                             {{"y", "z"}, 3},
                             {{"w", "x"}, 4},
                             {{"v", "y"}, 4}})};
        return red;
      case ConfigId::G17:
        if (k_ != 5) return std::nullopt;
        red.smaller = without({"u", "a", "z", "w", "v"});
        red.tables = {table({{{"u", "w"}, 1},
                             {{"a", "v"}, 1},
                             {{"w", "z"}, 2},
                             {{"u", "v"}, 2},
                             {{"x", "z"}, 3},
                             {{"v", "w"}, 3},
                             {{"a", "y"}, 3},
                             {{"w", "x"}, 4},
                             {{"v", "y"}, 4},
                             {{"v", "x"}, 5},
                             {{"w", "y"}, 5}}),
                      table({{{"v", "w"}, 1},
                             {{"w", "y"}, 2},
                             {{"a", "v"}, 2},
                             {{"w", "z"}, 3},
                             {{"v", "x"}, 3},
                             {{"w", "x"}, 4},
                             {{"u", "v"}, 4},
                             {{"a", "y"}, 4},
                             {{"x", "z"}, 5},
                             {{"u", "w"}, 5},
                             {{"v", "y"}, 5}}),
                      table({{{"v", "w"}, 1},
                             {{"a", "y"}, 1},
                             {{"w", "z"}, 2},
                             {{"v", "y"}, 2},
                             {{"v", "x"}, 3},
                             {{"u", "w"}, 3},
                             {{"w", "x"}, 4},
                             {{"a", "v"}, 4},
                             {{"x", "z"}, 5},
                             {{"u", "v"}, 5},
                             {{"w", "y"}, 5}})};
        return red;
      default:
        return std::nullopt;
    }
  }

  std::vector<Vertex> solid(const ConfigurationMatch& m) const {
    const auto& p = pattern(m.id);
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < p.roles.size(); ++i)
      if (p.degrees[i].kind == DegreeConstraint::Kind::Exact) out.push_back(m.assignment[i]);
    return out;
  }

  bool reduce(const Graph& g, const std::vector<Vertex>& order, const ConfigurationMatch& m) {
    auto red = plan(g, order, m);
    TraceStep s;
    s.kind = StepKind::Configuration;
    s.config = m.id;
    s.vertices = m.assignment;
    if (!red) {
      // No tabulated case applies: drop the solid vertices and search.
      Graph h = g.minus_vertices(solid(m));
      color(h, order);
      std::vector<Edge> fresh;
      for (const Edge& e : g.edges())
        if (!h.has_edge(e)) fresh.push_back(e);
      s.method = "search";
      local_search(g, fresh, m, s);
      return true;
    }
    color(red->smaller, order);
    for (const Edge& e : red->added) set(s.writes, e, 0);
    if (red->moved) {
      int c = get(red->moved->first);
      set(s.writes, red->moved->first, 0);
      set(s.writes, red->moved->second, c);
    }
    for (const Table& t : red->tables) {
      std::vector<std::pair<Edge, int>> concrete;
      for (const auto& [role, c] : t.entries) concrete.emplace_back(Edge(m.role(role.first), m.role(role.second)), c);
      if (auto got = fit(g, concrete)) {
        for (const auto& [e, c] : *got) set(s.writes, e, c);
        s.method = "table";
        trace.steps.push_back(std::move(s));
        return true;
      }
    }
    std::vector<Edge> fresh;
    for (const Edge& e : g.edges())
      if (!red->smaller.has_edge(e)) fresh.push_back(e);
    s.method = "search";
    local_search(g, fresh, m, s);
    return true;
  }

  // Colors `fresh`, then widens to every edge at the matched vertices; the
  // last resort is a search over all of g flagged as a diagnostic.
  void local_search(const Graph& g, const std::vector<Edge>& fresh, const ConfigurationMatch& m, TraceStep& s) {
    std::map<Edge, int> trial = colors;
    if (extend_coloring(g, trial, fresh, k_, ColoringMode::Proper, kLocalBudget)) return commit(g, trial, s);
    std::set<Edge> wide(fresh.begin(), fresh.end());
    for (Vertex v : m.assignment)
      for (Vertex w : g.neighbors(v)) wide.insert(Edge(v, w));
    trial = colors;
    if (extend_coloring(g, trial, {wide.begin(), wide.end()}, k_, ColoringMode::Proper, kLocalBudget))
      return commit(g, trial, s);
    trace.steps.push_back(std::move(s));
    exact(g, fresh, true, m.id);
  }

  void commit(const Graph& g, const std::map<Edge, int>& trial, TraceStep& s) {
    for (const Edge& e : g.edges())
      if (get(e) != trial.at(e)) set(s.writes, e, trial.at(e));
    trace.steps.push_back(std::move(s));
  }

  void exact(const Graph& g, const std::vector<Edge>&, bool diag, std::optional<ConfigId> id) {
    TraceStep s;
    s.kind = StepKind::ExactFallback;
    s.config = id;
    s.vertices = g.non_isolated();
    s.method = "search";
    s.diagnostic = diag;
    diagnostic = diagnostic || diag;
    std::map<Edge, int> trial;
    bool exhausted = false;
    if (!extend_coloring(g, trial, g.edges(), k_, ColoringMode::Proper, kGlobalBudget, &exhausted))
      throw std::logic_error(exhausted ? "exact fallback over budget" : "no proper coloring found");
    for (const auto& [e, c] : trial) set(s.writes, e, c);
    trace.steps.push_back(std::move(s));
  }

  int k_;
};

}  // namespace

ColoringResult po_edge_color(const Diagram& d) {
  Report r = validate(d);
  if (!r.valid) throw InvalidInput("invalid diagram: " + r.violations.front());
  const Graph& g = d.graph;
  const int k = g.max_degree();
  if (k < 4) throw InvalidInput("delta below four");
  Colorer c(k);
  c.color(g, spliced_order(d));
  ColoringResult out;
  out.coloring.k = k;
  out.coloring.mode = ColoringMode::Proper;
  for (const Edge& e : g.edges()) out.coloring.colors[e] = c.colors.at(e);
  if (c.colors.size() != g.size()) throw std::logic_error("coloring has stray edges");
  out.trace = std::move(c.trace);
  out.exact_fallback = c.diagnostic;
  Report check = verify_edge_coloring(g, out.coloring);
  if (!check.valid) throw std::logic_error("edge coloring failed verification: " + check.violations.front());
  return out;
}

ChromaticIndexResult chromatic_index(const Graph& g, int max_edges) {
  auto d = recognize(g);
  if (!d) throw NotPseudoOuterplanar();
  const int delta = g.max_degree();
  ChromaticIndexResult out;
  if (delta >= 4) {
    out.coloring = po_edge_color(*d).coloring;
    out.value = delta;
    return out;
  }
  out.coloring.mode = ColoringMode::Proper;
  if (delta == 3 && static_cast<int>(g.size()) > max_edges)
    throw GuardExceeded("too many edges for exact chromatic index");
  for (int k = delta; k <= delta + 1; ++k) {
    std::map<Edge, int> colors;
    bool exhausted = false;
    if (extend_coloring(g, colors, g.edges(), k, ColoringMode::Proper, kGlobalBudget, &exhausted)) {
      out.value = k;
      out.coloring.k = k;
      out.coloring.colors = std::move(colors);
      return out;
    }
    if (exhausted) throw GuardExceeded("exact chromatic index search over budget");
  }
  throw std::logic_error("no coloring with delta + 1 colors");
}

}  // namespace pog
