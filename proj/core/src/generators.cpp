#include "pog/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace pog {

namespace {

Diagram natural(int n, const std::vector<Edge>& edges) {
  Graph g(n, edges);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return diagram_from_order(g, order);
}

void cycle(std::vector<Edge>& es, int n) {
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Pn: return "pn";
    case Family::Qn: return "qn";
    case Family::Gn: return "gn";
    case Family::Mat12: return "mat12";
    case Family::Fig1: return "fig1";
    case Family::RandomPO: return "random";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  for (Family f : {Family::Pn, Family::Qn, Family::Gn, Family::Mat12, Family::Fig1, Family::RandomPO})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

Diagram gen_pn(int n) {
  if (n < 1) throw InvalidInput("pn needs n >= 1");
  const int total = 2 * n + 5;
  auto x = [](int i) { return i; };
  auto y = [n](int i) { return 2 * n + 2 - i; };
  const int v = 2 * n + 3, u = 2 * n + 4;
  std::vector<Edge> es;
  cycle(es, total);
  for (int i = 1; i <= n; ++i) es.emplace_back(x(i), y(i));
  es.emplace_back(x(0), v);
  es.emplace_back(y(0), u);
  return natural(total, es);
}

Diagram gen_qn(int n) {
  if (n < 1) throw InvalidInput("qn needs n >= 1");
  std::vector<Edge> es;
  auto z = [](int j) { return 5 * ((j - 1) / 2) + ((j - 1) % 2 ? 4 : 0); };
  for (int j = 1; j <= 2 * n; ++j) {
    Edge e(z(j), z(j % (2 * n) + 1));
    if (std::find(es.begin(), es.end(), e) == es.end()) es.push_back(e);
  }
  for (int i = 0; i < n; ++i) {
    const int a = 5 * i, v = a + 1, u = a + 2, w = a + 3, b = a + 4;
    for (Edge e : {Edge(u, v), Edge(v, w), Edge(w, u), Edge(v, a), Edge(v, b), Edge(w, a), Edge(w, b)})
      es.push_back(e);
  }
  return natural(5 * n, es);
}

Diagram gen_gn(int n) {
  if (n < 6) throw InvalidInput("gn needs n >= 6");
  std::vector<Edge> es;
  cycle(es, n);
  for (int i = 3; i <= n - 1; ++i) es.emplace_back(0, i - 1);
  for (int i = 1; i <= n / 2 - 1; ++i) es.emplace_back(2 * i - 1, 2 * i + 1);
  return natural(n, es);
}

Diagram gen_mat12() {
  std::vector<Edge> es;
  auto v = [](int i) { return (i - 1) % 12; };
  for (int i : {1, 4, 7, 10})
    for (auto [a, b] : {std::pair{i, i + 1}, {i, i + 2}, {i, i + 3}, {i + 1, i + 3}, {i + 2, i + 3}})
      es.emplace_back(v(a), v(b));
  es.emplace_back(v(1), v(7));
  es.emplace_back(v(4), v(10));
  return natural(12, es);
}

Diagram gen_fig1() {
  Graph g(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 5}, {0, 6}, {0, 7}, {4, 5}, {4, 6}, {4, 7}});
  const std::vector<Vertex> order{0, 1, 2, 3, 5, 4, 6, 7};
  return diagram_from_order(g, order);
}

Diagram gen_random_po(int n, std::uint64_t seed, double density) {
  if (n < 3) throw InvalidInput("random diagram needs n >= 3");
  if (!(density >= 0.0 && density <= 1.0)) throw InvalidInput("density must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(order[i], order[(i + 1) % n]);
  std::vector<Edge> candidates;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (!(i == 0 && j == n - 1)) candidates.emplace_back(order[i], order[j]);
  std::shuffle(candidates.begin(), candidates.end(), rng);

  std::bernoulli_distribution keep(density);
  std::vector<Edge> chords;
  std::vector<char> crossed;
  for (const Edge& c : candidates) {
    if (!keep(rng)) continue;
    int hits = 0, which = -1;
    for (std::size_t i = 0; i < chords.size() && hits < 2; ++i)
      if (interleaved(pos, c, chords[i])) {
        ++hits;
        which = static_cast<int>(i);
      }
    if (hits > 1 || (hits == 1 && crossed[which])) continue;
    if (hits == 1) crossed[which] = 1;
    chords.push_back(c);
    crossed.push_back(hits == 1);
  }
  es.insert(es.end(), chords.begin(), chords.end());
  return diagram_from_order(Graph(n, es), order);
}

Diagram generate(const FamilySpec& s) {
  switch (s.family) {
    case Family::Pn: return gen_pn(s.n);
    case Family::Qn: return gen_qn(s.n);
    case Family::Gn: return gen_gn(s.n);
    case Family::Mat12:
      if (s.n != 12) throw InvalidInput("mat12 has n = 12");
      return gen_mat12();
    case Family::Fig1: return gen_fig1();
    case Family::RandomPO: return gen_random_po(s.n, s.seed, s.density);
  }
  throw InvalidInput("unknown family");
}

}  // namespace pog
