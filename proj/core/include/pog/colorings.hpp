#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pog/configurations.hpp"
#include "pog/diagram.hpp"

namespace pog {

enum class StepKind { LowEdgeDegree, BlockSplit, Configuration, VizingBase, ExactFallback };

std::string to_string(StepKind k);

struct ColorWrite {
  Edge edge;
  int color = 0;  // 0 erases the edge's color
};

struct TraceStep {
  StepKind kind = StepKind::LowEdgeDegree;
  std::optional<ConfigId> config;
  std::vector<Vertex> vertices;
  std::vector<ColorWrite> writes;
  /// Extension came from the tabulated assignment ("table") or from a bounded
  /// search over the new and nearby edges ("search").
  std::string method;
  /// Set on exact fallbacks reached because no reduction applied.
  bool diagnostic = false;
};

struct ColorTrace {
  std::vector<TraceStep> steps;
};

/// Applies every write in order.
std::map<Edge, int> replay(const ColorTrace& t);

/// Proper coloring with at most Δ+1 colors by fan rotation and alternating
/// path inversion. k is set to the number of colors actually used (at least Δ).
EdgeColoring vizing_color(const Graph& g);

struct ColoringResult {
  EdgeColoring coloring;
  ColorTrace trace;
  bool exact_fallback = false;
};

/// Proper Δ-coloring of a pseudo-outerplanar drawing with Δ >= 4.
/// Throws InvalidInput("delta below four") or on an invalid diagram.
ColoringResult po_edge_color(const Diagram& d);

struct ChromaticIndexResult {
  int value = 0;
  EdgeColoring coloring;
};

/// Exact chromatic index of a pseudo-outerplanar graph. Δ >= 4 goes through
/// po_edge_color; Δ = 3 through exact search (edge guard `max_edges`).
ChromaticIndexResult chromatic_index(const Graph& g, int max_edges = 64);

/// Linear arboricity with a verified k-tree-coloring. Even Δ >= 6 is
/// constructive; the remaining degrees use exact search within `max_edges`.
ColoringResult po_linear_arboricity(const Diagram& d, int max_edges = 64);

/// Exact search for a k-coloring in the given mode, extending `fixed`
/// colors (edges not in `free` keep their color). Returns false when none
/// exists or when `node_budget` expansions are exhausted (`exhausted` set).
bool extend_coloring(const Graph& g, std::map<Edge, int>& colors, const std::vector<Edge>& free, int k,
                     ColoringMode mode, long long node_budget, bool* exhausted = nullptr);

}  // namespace pog
