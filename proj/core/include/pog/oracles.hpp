#pragma once

#include <chrono>
#include <optional>

#include "pog/diagram.hpp"

namespace pog {

/// Limits for the brute-force oracles. Running out is reported, never guessed.
struct SearchBudget {
  int max_vertices = 16;
  int max_edges = 80;
  long long max_nodes = 500'000'000;
  double time_limit_seconds = 600.0;
};

enum class Outcome { Found, None, OverBudget };

std::string to_string(Outcome o);

struct ValueResult {
  Outcome outcome = Outcome::OverBudget;  // Found when value is exact
  int value = 0;
};

struct EdgeSetResult {
  Outcome outcome = Outcome::OverBudget;
  std::vector<Edge> edges;
};

struct PartitionResult {
  Outcome outcome = Outcome::OverBudget;
  Decomposition decomposition;
};

/// Exact chromatic index: Δ if a plain backtracking search finds a Δ-coloring,
/// otherwise Δ+1.
ValueResult brute_chromatic_index(const Graph& g, const SearchBudget& b = {});

/// Exact linear arboricity, trying k = ceil(Δ/2), ceil(Δ/2)+1, ...
ValueResult brute_linear_arboricity(const Graph& g, const SearchBudget& b = {});

enum class RemovalKind { Matching, LinearForest, StarForest };

std::string to_string(RemovalKind k);
std::optional<RemovalKind> removal_kind_from_string(const std::string& s);

/// An edge set S of the given kind with g - S outerplanar, or None when no
/// such set exists.
EdgeSetResult exists_removal_decomposition(const Graph& g, RemovalKind kind, const SearchBudget& b = {});

/// Partition of E(g) into at most k forests, or None.
PartitionResult exists_k_forest_partition(const Graph& g, int k, const SearchBudget& b = {});

struct EnumeratedGraph {
  Graph graph;
  Diagram diagram;  // from recognize
};

/// Connected pseudo-outerplanar graphs on n vertices (n <= 8), sorted by
/// canonical key. With `labelled` every labelled copy is listed (n <= 7).
std::vector<EnumeratedGraph> enumerate_po(int n, bool labelled = false);

/// Connected graphs on n vertices up to isomorphism (n <= 8), no PO filter.
std::vector<Graph> enumerate_connected(int n);

/// All iso-classes for 1..n, concatenated in order of n.
std::vector<EnumeratedGraph> po_corpus(int max_n);

}  // namespace pog
