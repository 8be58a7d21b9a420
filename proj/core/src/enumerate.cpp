#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pog/canonical.hpp"
#include "pog/oracles.hpp"

namespace pog {

namespace {

// Connected graphs on n vertices up to isomorphism, keyed canonically.
// Every connected graph has a vertex whose removal keeps it connected, and
// deleting a vertex keeps a graph pseudo-outerplanar, so extending the
// classes on n-1 vertices by one vertex reaches all of them.
std::map<CanonicalKey, Graph> classes(int n, bool po_only) {
  std::map<CanonicalKey, Graph> out;
  if (n == 1) {
    Graph g(1);
    out.emplace(canonical_form(g), g);
    return out;
  }
  for (const auto& [key, h] : classes(n - 1, po_only)) {
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
      std::vector<Edge> es = h.edges();
      for (int v = 0; v < n - 1; ++v)
        if (mask >> v & 1u) es.emplace_back(v, n - 1);
      Graph g(n, es);
      CanonicalKey k = canonical_form(g);
      if (out.count(k)) continue;
      if (po_only && !recognize(g)) continue;
      out.emplace(k, canonical_graph(g));
    }
  }
  return out;
}

}  // namespace

std::vector<EnumeratedGraph> enumerate_po(int n, bool labelled) {
  if (n < 1) throw InvalidInput("n must be positive");
  if (n > kMaxCanonicalOrder || (labelled && n > 7)) throw GuardExceeded("enumeration limited to n <= 8 (7 labelled)");
  std::vector<EnumeratedGraph> out;
  for (const auto& [key, g] : classes(n, true)) {
    if (!labelled) {
      out.push_back({g, *recognize(g)});
      continue;
    }
    std::set<std::vector<Edge>> seen;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<Edge> es;
      for (const Edge& e : g.edges()) es.emplace_back(perm[e.u], perm[e.v]);
      std::sort(es.begin(), es.end());
      if (seen.insert(es).second) {
        Graph h(n, es);
        out.push_back({h, *recognize(h)});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1) throw InvalidInput("n must be positive");
  if (n > kMaxCanonicalOrder) throw GuardExceeded("enumeration limited to n <= 8");
  std::vector<Graph> out;
  for (const auto& [key, g] : classes(n, false)) out.push_back(g);
  return out;
}

std::vector<EnumeratedGraph> po_corpus(int max_n) {
  std::vector<EnumeratedGraph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = enumerate_po(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace pog
