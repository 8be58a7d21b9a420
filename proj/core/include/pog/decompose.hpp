#pragma once

#include "pog/diagram.hpp"

namespace pog {

struct ExtractionResult {
  std::vector<Edge> forest;  // crossed chords only
  Diagram remainder;         // same block orders, forest edges removed
};

/// Linear forest T of crossed chords with d_T(y) = 0, d_T(x), d_T(z) <= 1 and
/// an outerplanar drawing left behind. `d` must be a single closed block on all
/// of its vertices; x and z are the circular neighbours of y.
ExtractionResult extract_linear_forest(const Diagram& d, Vertex y, Vertex x, Vertex z);
/// As above with a star forest in which x and z can only appear as roots.
/// Found by exhaustive search over the crossing pairs; some diagrams admit no
/// such forest (NoSolution), and `max_nodes` bounds the search (GuardExceeded).
ExtractionResult extract_star_forest(const Diagram& d, Vertex y, Vertex x, Vertex z,
                                     long max_nodes = 2'000'000);

/// Two parts: the forest of `kind` (LinearForest or StarForest) and the
/// outerplanar remainder. The linear forest comes from block-by-block
/// extraction on the closed-up blocks; the star forest picks one chord from
/// every crossing pair by search, with no special vertex.
Decomposition cover_outerplanar_plus(const Diagram& d, PartKind kind);
/// Recognizes g first; throws NotPseudoOuterplanar when that fails.
Decomposition cover_outerplanar_plus(const Graph& g, PartKind kind);

enum class PieceKind { K3, K4 };

struct PeelStep {
  PieceKind kind = PieceKind::K3;
  std::vector<Vertex> removed;  // z for K3; u, v for K4
  Edge glue;                    // boundary edge xy the piece hangs on
  Diagram smaller;
};

/// Detaches one K3 or K4 piece from a maximal drawing that is a single closed
/// block. Throws InvalidInput("atomic") below three vertices.
PeelStep peel_maximal(const Diagram& d);

/// Forest, forest, matching covering E(g), via maximal completion and peeling.
Decomposition two_forests_plus_matching(const Diagram& d);
Decomposition two_forests_plus_matching(const Graph& g);

}  // namespace pog
