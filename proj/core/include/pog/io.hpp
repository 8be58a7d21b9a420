#pragma once

#include <optional>
#include <string>

#include "pog/colorings.hpp"
#include "pog/configurations.hpp"
#include "pog/diagram.hpp"

namespace pog {

// JSON documents (compact, one line):
//   graph        {"n": 5, "edges": [[0,1], ...]}
//   diagram      graph fields plus "blocks": [{"order": [...], "closed": true}, ...]
//   coloring     {"k": 4, "mode": "proper"|"linear-forest", "colors": [[u,v,c], ...]}
//   decomposition {"parts": [{"kind": "linear-forest", "edges": [[u,v], ...]}, ...]}
//   trace        {"steps": [{"kind", "config", "vertices", "writes": [[u,v,c]], "method", "diagnostic"}]}
// Parsers throw InvalidInput on malformed documents.

std::string to_json(const Graph& g);
std::string to_json(const Diagram& d);
std::string to_json(const EdgeColoring& c);
std::string to_json(const Decomposition& d);
std::string to_json(const ColorTrace& t);
std::string to_json(const ConfigurationMatch& m);

struct GraphDocument {
  Graph graph;
  std::optional<Diagram> diagram;  // present when the document has "blocks"
};

GraphDocument parse_graph_document(const std::string& text);
Graph parse_graph(const std::string& text);
Diagram parse_diagram(const std::string& text);
EdgeColoring parse_coloring(const std::string& text);
Decomposition parse_decomposition(const std::string& text);
ColorTrace parse_trace(const std::string& text);

std::string to_string(ColoringMode m);
std::optional<ColoringMode> coloring_mode_from_string(const std::string& s);

}  // namespace pog
