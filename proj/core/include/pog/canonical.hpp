#pragma once

#include <cstdint>

#include "pog/graph.hpp"

namespace pog {

inline constexpr int kMaxCanonicalOrder = 8;

/// Canonical key: vertex count plus the lexicographically largest upper-triangle
/// adjacency bit string over all relabellings. Exhaustive; n <= 8.
struct CanonicalKey {
  int n = 0;
  std::uint64_t bits = 0;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_form(const Graph& g);
/// The relabelled graph realising canonical_form(g).
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace pog
