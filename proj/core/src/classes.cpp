#include "pog/classes.hpp"

namespace pog {

std::optional<Diagram> recognize_closed(const Graph& g, int guard) {
  Diagram d{g, {}};
  for (const Block& b : blocks(g).blocks) {
    const auto& vs = b.vertices;
    const int m = static_cast<int>(vs.size());
    if (m <= 3) {
      d.blocks.push_back({vs, true});
      continue;
    }
    if (m > guard) throw GuardExceeded("block too large for exhaustive recognition");
    std::vector<Vertex> perm(vs.begin() + 1, vs.end());
    std::vector<Vertex> order(m);
    const Graph block = g.edge_subgraph(b.edges);
    bool found = false;
    do {
      if (perm.front() > perm.back()) continue;
      order[0] = vs[0];
      std::copy(perm.begin(), perm.end(), order.begin() + 1);
      bool cycle = true;
      for (int i = 0; i < m && cycle; ++i) cycle = g.has_edge(order[i], order[(i + 1) % m]);
      if (!cycle) continue;
      if (valid_on_order(block, order)) {
        found = true;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!found) return std::nullopt;
    d.blocks.push_back({order, true});
  }
  return d;
}

ClassFlags class_membership(const Graph& g, int minor_guard, int block_guard) {
  ClassFlags f;
  f.k4_minor_free = !has_minor(g, MinorPattern::K4, minor_guard);
  f.k23_minor_free = !has_minor(g, MinorPattern::K23, minor_guard);
  f.outerplanar = f.k4_minor_free && f.k23_minor_free;
  f.pseudo_outerplanar = recognize(g, block_guard).has_value();
  f.quasi_hamiltonian_po = f.pseudo_outerplanar && recognize_closed(g, block_guard).has_value();
  return f;
}

}  // namespace pog
