#include "pog/colorings.hpp"

namespace pog {

namespace {

class FanColorer {
 public:
  explicit FanColorer(const Graph& g)
      : g_(g), colors_(g.max_degree() + 1), at_(g.order(), std::vector<Vertex>(colors_ + 1, -1)) {}

  void color_all() {
    for (const Edge& e : g_.edges()) color_edge(e.u, e.v);
  }

  std::map<Edge, int> result() const { return col_; }

 private:
  bool free_at(Vertex v, int c) const { return at_[v][c] < 0; }

  int free_color(Vertex v) const {
    for (int c = 1; c <= colors_; ++c)
      if (free_at(v, c)) return c;
    throw std::logic_error("no free color");
  }

  int get(Vertex a, Vertex b) const {
    auto it = col_.find(Edge(a, b));
    return it == col_.end() ? 0 : it->second;
  }

  void set(Vertex a, Vertex b, int c) {
    int old = get(a, b);
    if (old) {
      at_[a][old] = -1;
      at_[b][old] = -1;
    }
    if (c) {
      at_[a][c] = b;
      at_[b][c] = a;
      col_[Edge(a, b)] = c;
    } else {
      col_.erase(Edge(a, b));
    }
  }

  void color_edge(Vertex u, Vertex v) {
    // Maximal fan at u starting with v.
    std::vector<Vertex> fan{v};
    std::vector<char> in_fan(g_.order(), 0);
    in_fan[v] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (Vertex w : g_.neighbors(u)) {
        int c = get(u, w);
        if (in_fan[w] || c == 0 || !free_at(fan.back(), c)) continue;
        fan.push_back(w);
        in_fan[w] = 1;
        grew = true;
        break;
      }
    }
    const int c = free_color(u);
    const int d = free_color(fan.back());

    // Invert the c/d path starting at u (its first edge has color d).
    if (c != d) {
      std::vector<std::pair<Vertex, Vertex>> path;
      Vertex x = u;
      int want = d;
      while (at_[x][want] >= 0) {
        Vertex y = at_[x][want];
        path.emplace_back(x, y);
        x = y;
        want = want == d ? c : d;
      }
      std::vector<int> old;
      for (auto [a, b] : path) old.push_back(get(a, b));
      for (auto [a, b] : path) set(a, b, 0);
      for (std::size_t i = 0; i < path.size(); ++i) set(path[i].first, path[i].second, old[i] == c ? d : c);
    }

    // First fan vertex where d is free; the prefix up to it is still a fan.
    std::size_t w = 0;
    while (w < fan.size() && !free_at(fan[w], d)) ++w;
    if (w == fan.size()) throw std::logic_error("fan rotation failed");
    for (std::size_t j = 0; j < w; ++j) {
      int next = get(u, fan[j + 1]);
      set(u, fan[j + 1], 0);
      set(u, fan[j], next);
    }
    set(u, fan[w], d);
  }

  const Graph& g_;
  int colors_;
  std::vector<std::vector<Vertex>> at_;
  std::map<Edge, int> col_;
};

}  // namespace

EdgeColoring vizing_color(const Graph& g) {
  EdgeColoring out;
  out.mode = ColoringMode::Proper;
  if (g.size() == 0) return out;
  FanColorer f(g);
  f.color_all();
  out.colors = f.result();
  for (const auto& [e, c] : out.colors) out.k = std::max(out.k, c);
  out.k = std::max(out.k, g.max_degree());
  return out;
}

}  // namespace pog
