#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pog/graph.hpp"

namespace pog {

/// Circular vertex sequence of one block. `closed` marks a closed disk: every
/// consecutive pair (including last-first) is an edge.
struct BlockOrder {
  std::vector<Vertex> order;
  bool closed = true;
  friend bool operator==(const BlockOrder&, const BlockOrder&) = default;
};

/// A pseudo-outerplanar drawing: each block on its own circle, straight chords.
struct Diagram {
  Graph graph;
  std::vector<BlockOrder> blocks;
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

struct CrossingPair {
  Edge first;
  Edge second;  // first < second
  friend auto operator<=>(const CrossingPair&, const CrossingPair&) = default;
};

/// Whether two edges with four distinct endpoints interleave on the circle.
/// `pos` maps vertex -> position on the circle.
bool interleaved(std::span<const int> pos, const Edge& a, const Edge& b);

/// Interleaved pairs among the edges of g whose endpoints both lie on `order`.
std::vector<CrossingPair> crossings_on_order(const Graph& g, std::span<const Vertex> order);

/// Checks every diagram invariant; violations name the offending block or chords.
Report validate(const Diagram& d);

/// Interleaved chord pairs over all blocks; throws InvalidInput if d is invalid.
std::vector<CrossingPair> crossing_pairs(const Diagram& d);
/// Chords that take part in a crossing.
std::vector<Edge> crossed_chords(const Diagram& d);
/// Edges joining circularly consecutive vertices of their block.
std::vector<Edge> boundary_edges(const Diagram& d);
std::vector<Edge> chords(const Diagram& d);

/// Block orders obtained by restricting one circular order of (at least) all
/// non-isolated vertices to each block of g.
Diagram diagram_from_order(const Graph& g, std::span<const Vertex> order);

/// One circular order over all vertices: block orders spliced at cut vertices,
/// components and isolated vertices appended. Restricting it to the blocks of
/// d.graph reproduces d's drawing up to rotation, with no new crossings.
std::vector<Vertex> spliced_order(const Diagram& d);

/// True iff `order` restricted to every block of g is a valid drawing.
bool valid_on_order(const Graph& g, std::span<const Vertex> order);

inline constexpr int kDefaultRecognizeGuard = 10;

/// Exhaustive crossing-minimal drawing per block (ties: closed disk first, then
/// lexicographically least sequence). Returns nullopt when some block has no
/// valid circular order. Throws GuardExceeded for blocks above `guard` vertices.
std::optional<Diagram> recognize(const Graph& g, int guard = kDefaultRecognizeGuard);

/// Redraws the block spanned by `cycle` so that the cycle is its boundary, by
/// the split-and-recombine construction over crossing cycle edges.
/// Throws InvalidInput if `cycle` is not a hamiltonian cycle of a block.
Diagram to_hamiltonian_diagram(const Diagram& d, std::span<const Vertex> cycle);

struct Augmented {
  Diagram diagram;
  std::vector<Edge> added;
};

/// Adds every missing consecutive pair of every block order (no new crossings).
Augmented quasi_hamiltonize(const Diagram& d);

struct Completion {
  Diagram diagram;
  std::vector<Edge> added;
  bool graph_level_checked = false;
};

/// Fixed-order greedy completion followed, when the graph has at most `guard`
/// non-isolated vertices, by a re-recognition pass that adds any edge some other
/// drawing admits; iterated to a fixed point.
Completion maximal_completion(const Diagram& d, int guard = 8);

/// Adds, in lexicographic order, every pair that keeps `order` a valid drawing
/// of g. Returns the added pairs.
std::vector<Edge> fill_at_fixed_order(Graph& g, std::span<const Vertex> order);

/// Pairs that can be added to the drawing on its current spliced order.
std::vector<Edge> addable_edges_at_fixed_order(const Diagram& d);

}  // namespace pog
