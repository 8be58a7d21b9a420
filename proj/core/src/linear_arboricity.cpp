#include <set>

#include "pog/colorings.hpp"

namespace pog {

namespace {

constexpr long long kLocalBudget = 200000;
constexpr long long kExactBudget = 200000000;

bool linear_ok(const Graph& g, const std::map<Edge, int>& colors) {
  EdgeColoring c;
  c.mode = ColoringMode::LinearForest;
  int k = 0;
  for (const Edge& e : g.edges()) {
    auto it = colors.find(e);
    if (it == colors.end()) return false;
    c.colors[e] = it->second;
    k = std::max(k, it->second);
  }
  c.k = k;
  return verify_edge_coloring(g, c).valid;
}

// Linear forests with k = Δ/2 colors for even Δ >= 6, by low-edge deletion
// and the two-vertex configuration with equal neighbourhoods.
class LinearColorer {
 public:
  explicit LinearColorer(int k) : k_(k) {}

  void color(const Graph& g, const std::vector<Vertex>& order) {
    if (g.size() == 0) return;
    for (const Edge& e : g.edges())
      if (g.degree(e.u) + g.degree(e.v) <= 2 * k_ + 1) return low_edge(g, order, e);
    if (auto m = match_pattern(g, ConfigId::G3)) return two_vertices(g, order, *m);
    exact(g, std::nullopt);
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

  int count(const Graph& g, Vertex v, int c) const {
    int n = 0;
    for (Vertex w : g.neighbors(v)) n += get(Edge(v, w)) == c;
    return n;
  }

  // Walks the c-colored path from a (which has at most one c-edge) to its end.
  Vertex path_end(const Graph& g, Vertex a, int c) const {
    Vertex prev = -1, cur = a;
    for (;;) {
      Vertex next = -1;
      for (Vertex w : g.neighbors(cur))
        if (w != prev && get(Edge(cur, w)) == c) next = w;
      if (next < 0) return cur;
      prev = cur;
      cur = next;
    }
  }

  void low_edge(const Graph& g, const std::vector<Vertex>& order, const Edge& e) {
    Graph h = g.minus_edge(e);
    color(h, order);
    TraceStep s;
    s.kind = StepKind::LowEdgeDegree;
    s.vertices = {e.u, e.v};
    for (int c = 1; c <= k_; ++c) {
      if (count(h, e.u, c) > 1 || count(h, e.v, c) > 1) continue;
      if (count(h, e.u, c) == 1 && count(h, e.v, c) == 1 && path_end(h, e.u, c) == e.v) continue;
      s.method = "table";
      set(s.writes, e, c);
      trace.steps.push_back(std::move(s));
      return;
    }
    s.method = "search";
    std::set<Edge> free{e};
    search(g, free, {e.u, e.v}, s);
  }

  void two_vertices(const Graph& g, const std::vector<Vertex>& order, const ConfigurationMatch& m) {
    const Vertex u = m.role("u"), v = m.role("v"), x = m.role("x"), y = m.role("y");
    TraceStep s;
    s.kind = StepKind::Configuration;
    s.config = ConfigId::G3;
    s.vertices = m.assignment;
    const Edge vx(v, x), vy(v, y), ux(u, x), uy(u, y), xy(x, y);
    std::vector<Vertex> drop{v};
    if (!g.has_edge(xy)) {
      Graph h = g.minus_vertices(drop).plus_edge(xy);
      if (h.max_degree() <= 2 * k_ && valid_on_order(h, order)) {
        color(h, order);
        // The x-y edge is rerouted through v.
        const int c = get(xy);
        set(s.writes, xy, 0);
        set(s.writes, vx, c);
        set(s.writes, vy, c);
        return finish(g, s);
      }
      Graph h2 = g.minus_vertices(drop);
      color(h2, order);
      s.method = "search";
      return search(g, {vx, vy}, {u, v, x, y}, s);
    }
    Graph h = g.minus_vertices(drop);
    color(h, order);
    auto single = [&](Vertex a) {
      for (int c = 1; c <= k_; ++c)
        if (count(h, a, c) == 1) return c;
      for (int c = 1; c <= k_; ++c)
        if (count(h, a, c) == 0) return c;
      return 0;
    };
    const int cx = single(x), cy = single(y);
    std::map<Edge, int> saved = colors;
    std::vector<std::vector<std::pair<Edge, int>>> tries;
    tries.push_back({{vx, cx}, {vy, cy}});
    if (cx == cy) {
      const int a = cx, b = get(ux), old_xy = get(xy);
      // Exchange the colors on ux and vx.
      tries.push_back({{vx, b}, {ux, a}, {vy, cy}});
      if (get(ux) == a && get(uy) == a) tries.push_back({{xy, a}, {vx, old_xy}, {uy, old_xy}, {vy, a}});
    }
    for (const auto& t : tries) {
      std::map<Edge, int> trial = saved;
      for (const auto& [e, c] : t) trial[e] = c;
      if (!linear_ok(g, trial)) continue;
      for (const auto& [e, c] : t)
        if (get(e) != c) set(s.writes, e, c);
      s.method = "table";
      trace.steps.push_back(std::move(s));
      return;
    }
    s.method = "search";
    search(g, {vx, vy}, {u, v, x, y}, s);
  }

  void finish(const Graph& g, TraceStep& s) {
    if (!linear_ok(g, colors)) throw std::logic_error("linear forest extension failed");
    s.method = "table";
    trace.steps.push_back(std::move(s));
  }

  // Colors `free`, then every edge at `near`; last resort is a diagnostic
  // search over all of g.
  void search(const Graph& g, std::set<Edge> free, const std::vector<Vertex>& near, TraceStep& s) {
    std::map<Edge, int> trial = colors;
    if (extend_coloring(g, trial, {free.begin(), free.end()}, k_, ColoringMode::LinearForest, kLocalBudget))
      return commit(g, trial, s);
    for (Vertex a : near)
      for (Vertex b : g.neighbors(a)) free.insert(Edge(a, b));
    trial = colors;
    if (extend_coloring(g, trial, {free.begin(), free.end()}, k_, ColoringMode::LinearForest, kLocalBudget))
      return commit(g, trial, s);
    auto id = s.config;
    trace.steps.push_back(std::move(s));
    exact(g, id);
  }

  void commit(const Graph& g, const std::map<Edge, int>& trial, TraceStep& s) {
    for (const Edge& e : g.edges())
      if (get(e) != trial.at(e)) set(s.writes, e, trial.at(e));
    trace.steps.push_back(std::move(s));
  }

  void exact(const Graph& g, std::optional<ConfigId> id) {
    TraceStep s;
    s.kind = StepKind::ExactFallback;
    s.config = id;
    s.vertices = g.non_isolated();
    s.method = "search";
    s.diagnostic = true;
    diagnostic = true;
    std::map<Edge, int> trial;
    bool exhausted = false;
    if (!extend_coloring(g, trial, g.edges(), k_, ColoringMode::LinearForest, kExactBudget, &exhausted))
      throw std::logic_error(exhausted ? "exact fallback over budget" : "no linear forest coloring found");
    for (const Edge& e : g.edges())
      if (get(e) != trial.at(e)) set(s.writes, e, trial.at(e));
    trace.steps.push_back(std::move(s));
  }

  int k_;
};

}  // namespace

ColoringResult po_linear_arboricity(const Diagram& d, int max_edges) {
  Report r = validate(d);
  if (!r.valid) throw InvalidInput("invalid diagram: " + r.violations.front());
  const Graph& g = d.graph;
  const int delta = g.max_degree();
  ColoringResult out;
  out.coloring.mode = ColoringMode::LinearForest;
  if (g.size() == 0) return out;

  if (delta >= 6 && delta % 2 == 0) {
    LinearColorer c(delta / 2);
    c.color(g, spliced_order(d));
    out.coloring.k = delta / 2;
    for (const Edge& e : g.edges()) out.coloring.colors[e] = c.colors.at(e);
    if (c.colors.size() != g.size()) throw std::logic_error("coloring has stray edges");
    out.trace = std::move(c.trace);
    out.exact_fallback = c.diagnostic;
  } else {
    if (delta > 2 && static_cast<int>(g.size()) > max_edges)
      throw GuardExceeded("too many edges for exact linear arboricity");
    for (int k = (delta + 1) / 2;; ++k) {
      std::map<Edge, int> colors;
      bool exhausted = false;
      if (extend_coloring(g, colors, g.edges(), k, ColoringMode::LinearForest, kExactBudget, &exhausted)) {
        out.coloring.k = k;
        out.coloring.colors = colors;
        TraceStep s;
        s.kind = StepKind::ExactFallback;
        s.vertices = g.non_isolated();
        s.method = "search";
        for (const auto& [e, c] : colors) s.writes.push_back({e, c});
        out.trace.steps.push_back(std::move(s));
        break;
      }
      if (exhausted) throw GuardExceeded("exact linear arboricity search over budget");
    }
  }
  Report check = verify_edge_coloring(g, out.coloring);
  if (!check.valid) throw std::logic_error("linear forest coloring failed verification: " + check.violations.front());
  return out;
}

}  // namespace pog
