#include <algorithm>
#include <stdexcept>

#include "pog/diagram.hpp"

namespace pog {

namespace {

// Splits the block along two crossing cycle edges v_j v_{j+1}, v_k v_{k+1}: the
// arc U from v_j to v_{k+1} avoiding the other two endpoints carries the cycle
// path v_{k+1}..v_j, the rest carries v_{j+1}..v_k. Each side is redrawn
// recursively with its path closed by a new edge, then the two are glued back.
std::vector<Vertex> redraw(const std::vector<Vertex>& order, const std::vector<Vertex>& cycle, int n) {
  const int m = static_cast<int>(cycle.size());
  if (m <= 3) return cycle;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < m; ++i) pos[order[i]] = i;

  int j = -1, k = -1;
  for (int a = 0; a < m && j < 0; ++a)
    for (int b = a + 1; b < m; ++b) {
      Edge ea(cycle[a], cycle[(a + 1) % m]);
      Edge eb(cycle[b], cycle[(b + 1) % m]);
      if (interleaved(pos, ea, eb)) {
        j = a;
        k = b;
        break;
      }
    }
  if (j < 0) return cycle;  // no cycle edges cross: the cycle already bounds the disk

  const Vertex vj = cycle[j], vj1 = cycle[j + 1], vk = cycle[k], vk1 = cycle[(k + 1) % m];
  // Walk from v_j in the direction that reaches v_{k+1} first.
  std::vector<char> in_u(n, 0);
  for (int dir : {1, -1}) {
    std::vector<Vertex> arc;
    int p = pos[vj];
    bool ok = false;
    for (int step = 0; step < m; ++step) {
      Vertex x = order[((p + dir * step) % m + m) % m];
      if (x == vj1 || x == vk) break;
      arc.push_back(x);
      if (x == vk1) {
        ok = true;
        break;
      }
    }
    if (ok) {
      for (Vertex x : arc) in_u[x] = 1;
      break;
    }
  }

  std::vector<Vertex> c1, c2;
  for (int i = k + 1; i < m; ++i) c1.push_back(cycle[i]);
  for (int i = 0; i <= j; ++i) c1.push_back(cycle[i]);
  for (int i = j + 1; i <= k; ++i) c2.push_back(cycle[i]);
  for (Vertex x : c1)
    if (!in_u[x]) throw std::logic_error("cycle path leaves its side of the split");
  for (Vertex x : c2)
    if (in_u[x]) throw std::logic_error("cycle path leaves its side of the split");

  std::vector<Vertex> o1, o2;
  for (Vertex x : order) (in_u[x] ? o1 : o2).push_back(x);
  // Each side comes back as some rotation of its closed path.
  auto r1 = redraw(o1, c1, n);
  auto r2 = redraw(o2, c2, n);
  std::rotate(r1.begin(), std::find(r1.begin(), r1.end(), vk1), r1.end());
  std::rotate(r2.begin(), std::find(r2.begin(), r2.end(), vj1), r2.end());
  if (r1.front() != vk1 || r1.back() != vj || r2.front() != vj1 || r2.back() != vk)
    throw std::logic_error("recombination lost the cycle ends");
  r1.insert(r1.end(), r2.begin(), r2.end());
  return r1;
}

}  // namespace

Diagram to_hamiltonian_diagram(const Diagram& d, std::span<const Vertex> cycle) {
  Report r = validate(d);
  if (!r.valid) throw InvalidInput("invalid diagram: " + r.violations.front());
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  auto it = std::find_if(d.blocks.begin(), d.blocks.end(), [&](const BlockOrder& b) {
    std::vector<Vertex> vs = b.order;
    std::sort(vs.begin(), vs.end());
    return vs == sorted;
  });
  const std::size_t m = cycle.size();
  bool ok = it != d.blocks.end() && m >= 3 && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  for (std::size_t i = 0; ok && i < m; ++i) ok = d.graph.has_edge(cycle[i], cycle[(i + 1) % m]);
  if (!ok) throw InvalidInput("not a hamiltonian cycle of a block");

  std::vector<Vertex> c(cycle.begin(), cycle.end());
  Diagram out = d;
  auto& block = out.blocks[it - d.blocks.begin()];
  block.order = redraw(block.order, c, d.graph.order());
  block.closed = true;
  Report check = validate(out);
  if (!check.valid) throw std::logic_error("redrawn block is invalid: " + check.violations.front());
  return out;
}

}  // namespace pog
