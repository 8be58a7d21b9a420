#include <set>

#include "pog/colorings.hpp"

namespace pog {

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::LowEdgeDegree: return "low-edge-degree";
    case StepKind::BlockSplit: return "block-split";
    case StepKind::Configuration: return "configuration";
    case StepKind::VizingBase: return "vizing-base";
    case StepKind::ExactFallback: return "exact-fallback";
  }
  return "?";
}

std::map<Edge, int> replay(const ColorTrace& t) {
  std::map<Edge, int> out;
  for (const auto& s : t.steps)
    for (const auto& w : s.writes) {
      if (w.color == 0)
        out.erase(w.edge);
      else
        out[w.edge] = w.color;
    }
  return out;
}

namespace {

class Search {
 public:
  Search(const Graph& g, int k, ColoringMode mode, long long budget)
      : k_(k),
        linear_(mode == ColoringMode::LinearForest),
        budget_(budget),
        cnt_(g.order(), std::vector<int>(k + 1, 0)),
        uses_(k + 1, 0),
        parent_(k + 1, std::vector<int>(g.order())),
        size_(k + 1, std::vector<int>(g.order(), 1)) {
    for (auto& p : parent_)
      for (int v = 0; v < g.order(); ++v) p[v] = v;
  }

  bool fix(const Edge& e, int c) {
    if (c < 1 || c > k_ || !allowed(e, c)) return false;
    apply(e, c);
    return true;
  }

  bool solve(const std::vector<Edge>& free, std::map<Edge, int>& out) {
    free_ = free;
    assign_.assign(free.size(), 0);
    if (!rec(static_cast<int>(free.size()))) return false;
    for (std::size_t i = 0; i < free_.size(); ++i) out[free_[i]] = assign_[i];
    return true;
  }

  bool exhausted() const { return exhausted_; }

 private:
  int find(int c, int v) const {
    while (parent_[c][v] != v) v = parent_[c][v];
    return v;
  }

  bool allowed(const Edge& e, int c) const {
    if (linear_) return cnt_[e.u][c] < 2 && cnt_[e.v][c] < 2 && find(c, e.u) != find(c, e.v);
    return cnt_[e.u][c] == 0 && cnt_[e.v][c] == 0;
  }

  void apply(const Edge& e, int c) {
    ++cnt_[e.u][c];
    ++cnt_[e.v][c];
    ++uses_[c];
    int a = find(c, e.u), b = find(c, e.v);
    if (size_[c][a] < size_[c][b]) std::swap(a, b);
    parent_[c][b] = a;
    size_[c][a] += size_[c][b];
    history_.push_back({c, b, a});
  }

  void undo(const Edge& e, int c) {
    --cnt_[e.u][c];
    --cnt_[e.v][c];
    --uses_[c];
    auto [col, child, root] = history_.back();
    history_.pop_back();
    parent_[col][child] = child;
    size_[col][root] -= size_[col][child];
  }

  bool rec(int remaining) {
    if (remaining == 0) return true;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    // Most constrained edge first.
    int best = -1, best_count = k_ + 1;
    for (std::size_t i = 0; i < free_.size(); ++i) {
      if (assign_[i]) continue;
      int count = 0;
      for (int c = 1; c <= k_; ++c) count += allowed(free_[i], c);
      if (count < best_count) {
        best = static_cast<int>(i);
        best_count = count;
        if (count == 0) return false;
      }
    }
    const Edge e = free_[best];
    bool tried_unused = false;
    for (int c = 1; c <= k_; ++c) {
      if (!allowed(e, c)) continue;
      // Colors not used anywhere yet are interchangeable.
      if (uses_[c] == 0) {
        if (tried_unused) continue;
        tried_unused = true;
      }
      assign_[best] = c;
      apply(e, c);
      if (rec(remaining - 1)) return true;
      undo(e, c);
      assign_[best] = 0;
      if (exhausted_) return false;
    }
    return false;
  }

  struct Union {
    int color, child, root;
  };

  int k_;
  bool linear_;
  long long budget_;
  long long nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::vector<int>> cnt_;
  std::vector<int> uses_;
  std::vector<std::vector<int>> parent_, size_;
  std::vector<Union> history_;
  std::vector<Edge> free_;
  std::vector<int> assign_;
};

}  // namespace

bool extend_coloring(const Graph& g, std::map<Edge, int>& colors, const std::vector<Edge>& free, int k,
                     ColoringMode mode, long long node_budget, bool* exhausted) {
  if (exhausted) *exhausted = false;
  std::set<Edge> free_set(free.begin(), free.end());
  for (const Edge& e : free)
    if (!g.has_edge(e)) throw InvalidInput("free edge " + to_string(e) + " not in graph");
  Search s(g, k, mode, node_budget);
  for (const Edge& e : g.edges()) {
    if (free_set.count(e)) continue;
    auto it = colors.find(e);
    if (it == colors.end()) throw InvalidInput("edge " + to_string(e) + " has no fixed color");
    if (!s.fix(e, it->second)) return false;
  }
  std::map<Edge, int> found;
  if (!s.solve({free_set.begin(), free_set.end()}, found)) {
    if (exhausted) *exhausted = s.exhausted();
    return false;
  }
  for (const auto& [e, c] : found) colors[e] = c;
  return true;
}

}  // namespace pog
