#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pog/diagram.hpp"

namespace pog {

enum class ConfigId { G1, G2, G3, G4, G5, G6, G12, G13, G16, G17 };

std::string to_string(ConfigId id);
std::optional<ConfigId> config_id_from_string(const std::string& s);

struct DegreeConstraint {
  enum class Kind { Exact, AtLeast } kind = Kind::AtLeast;
  int value = 0;
};

/// Roles are indices into `roles`. Solid roles carry an exact degree: they have
/// no edges beyond the ones listed. Hollow roles only need the listed edges.
struct ConfigurationPattern {
  ConfigId id = ConfigId::G1;
  std::vector<std::string> roles;
  std::vector<DegreeConstraint> degrees;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> optional_edges;  // may or may not be present
  std::vector<std::pair<int, int>> non_edges;
  /// Circular sequence in which the drawn configuration meets the boundary;
  /// empty when the drawing is not pinned. Recorded, not enforced.
  std::vector<int> frame;
  /// Adjacency and degrees were rebuilt from the reduction steps that use the
  /// pattern, not from its drawing.
  bool reconstructed = true;
};

struct ConfigurationMatch {
  ConfigId id = ConfigId::G1;
  std::vector<std::pair<std::string, Vertex>> roles;
  std::vector<Vertex> assignment;  // role index -> vertex
  std::vector<Edge> edges;         // witness edges, including present optional ones
  /// For each optional pair: present in the host.
  std::vector<bool> optional_present;
  /// For G3 with xy absent: whether xy can be drawn into the current diagram.
  std::optional<bool> xy_addable;
  /// Crossing pairs of the host diagram among the witness edges.
  std::vector<CrossingPair> crossings;

  Vertex role(const std::string& name) const;
};

const std::vector<ConfigurationPattern>& catalog();
const ConfigurationPattern& pattern(ConfigId id);

/// Lexicographically least role assignment (in role order) of the first
/// allowed pattern, in catalog order, that matches. Throws on invalid diagrams.
std::optional<ConfigurationMatch> find_configuration(const Diagram& d, const std::vector<ConfigId>& allowed);

/// Same search on a bare graph; diagram-position fields stay empty.
std::optional<ConfigurationMatch> match_pattern(const Graph& g, ConfigId id);

/// Re-checks a match against the host: edges, non-edges, exact degrees.
bool match_holds(const Graph& g, const ConfigurationMatch& m);

/// The eight patterns used by the edge-coloring reductions, in dispatch order.
const std::vector<ConfigId>& coloring_patterns();

}  // namespace pog
