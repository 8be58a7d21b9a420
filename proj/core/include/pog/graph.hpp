#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pog/errors.hpp"

namespace pog {

using Vertex = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool has(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws InvalidInput on loops, duplicates or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  int max_degree() const;
  /// Minimum degree over all vertices; 0 for the empty graph.
  int min_degree() const;
  /// Minimum degree over vertices with at least one edge.
  int min_positive_degree() const;
  std::vector<Vertex> non_isolated() const;

  // Derived graphs keep the vertex numbering; removed vertices become isolated.
  Graph plus_edge(const Edge& e) const;
  Graph plus_edges(std::span<const Edge> es) const;
  Graph minus_edge(const Edge& e) const;
  Graph minus_edges(std::span<const Edge> es) const;
  Graph minus_vertices(std::span<const Vertex> vs) const;
  /// Subgraph on the given edges (all must be edges of this graph).
  Graph edge_subgraph(std::span<const Edge> es) const;
  /// Induced subgraph relabelled to 0..|vs|-1 in the order given.
  Graph induced_relabelled(std::span<const Vertex> vs) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted
};

struct BlockStructure {
  std::vector<Block> blocks;        // sorted by vertex list
  std::vector<Vertex> cut_vertices;  // sorted
};

/// Biconnected components; isolated vertices belong to no block.
BlockStructure blocks(const Graph& g);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// Connected on >= 3 vertices with no cut vertex.
bool is_biconnected(const Graph& g);

/// Vertex connectivity of a connected graph with n >= 2 (n-1 when complete).
int vertex_connectivity(const Graph& g);

struct SubgraphKind {
  bool forest = false;
  bool linear_forest = false;
  bool star_forest = false;
  bool matching = false;
};

/// Throws InvalidInput if some edge of `s` is not in g.
SubgraphKind classify_subgraph(const Graph& g, std::span<const Edge> s);

enum class ColoringMode { Proper, LinearForest };

struct EdgeColoring {
  int k = 0;
  ColoringMode mode = ColoringMode::Proper;
  std::map<Edge, int> colors;  // colors in 1..k
};

struct Report {
  bool valid = true;
  std::vector<std::string> violations;
  void fail(std::string why) {
    valid = false;
    violations.push_back(std::move(why));
  }
};

/// Throws InvalidInput when the assignment is not exactly E(g).
Report verify_edge_coloring(const Graph& g, const EdgeColoring& c);

enum class PartKind { Forest, LinearForest, StarForest, Matching, OuterplanarRemainder };

std::string to_string(PartKind k);
std::optional<PartKind> part_kind_from_string(const std::string& s);

struct Part {
  PartKind kind = PartKind::Forest;
  std::vector<Edge> edges;
};

struct Decomposition {
  std::vector<Part> parts;
};

/// Disjointness, exact cover of E(g), and each part's kind predicate.
/// `minor_guard` bounds the outerplanarity checks of remainder parts.
Report verify_decomposition(const Graph& g, const Decomposition& d, int minor_guard = 1 << 20);

}  // namespace pog
