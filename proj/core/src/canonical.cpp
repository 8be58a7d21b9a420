#include "pog/canonical.hpp"

#include <numeric>

namespace pog {

namespace {

std::uint64_t encode(const Graph& g, const std::vector<int>& perm) {
  // perm[new] = old. Bits in row-major order over pairs (i<j) of new labels.
  const int n = g.order();
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) bits = (bits << 1) | (g.has_edge(perm[i], perm[j]) ? 1u : 0u);
  return bits;
}

std::vector<int> best_permutation(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) throw GuardExceeded("canonical form limited to 8 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Only labellings with non-increasing degree are scanned. That set is
  // isomorphism-invariant, so its maximum is still a canonical key.
  std::vector<int> best = perm;
  std::uint64_t best_bits = 0;
  bool have = false;
  std::sort(perm.begin(), perm.end());
  do {
    bool sorted = true;
    for (int i = 0; i + 1 < n && sorted; ++i)
      if (g.degree(perm[i]) < g.degree(perm[i + 1])) sorted = false;
    if (!sorted) continue;
    std::uint64_t bits = encode(g, perm);
    if (!have || bits > best_bits) {
      best_bits = bits;
      best = perm;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

CanonicalKey canonical_form(const Graph& g) {
  auto perm = best_permutation(g);
  return {g.order(), encode(g, perm)};
}

Graph canonical_graph(const Graph& g) {
  auto perm = best_permutation(g);
  return g.induced_relabelled(perm);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace pog
