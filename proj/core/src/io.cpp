#include "pog/io.hpp"

#include "json.hpp"

namespace pog {

namespace {

using nlohmann::json;

json edges_json(const std::vector<Edge>& es) {
  json a = json::array();
  for (const Edge& e : es) a.push_back({e.u, e.v});
  return a;
}

json graph_json(const Graph& g) { return {{"n", g.order()}, {"edges", edges_json(g.edges())}}; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j) {
  if (!j.is_number_integer()) throw InvalidInput("expected an integer");
  return j.get<int>();
}

Edge as_edge(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidInput("an edge is a pair [u, v]");
  return Edge(as_int(j[0]), as_int(j[1]));
}

std::vector<Edge> as_edges(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected an edge list");
  std::vector<Edge> out;
  for (const json& e : j) out.push_back(as_edge(e));
  return out;
}

std::vector<Vertex> as_vertices(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected a vertex list");
  std::vector<Vertex> out;
  for (const json& v : j) out.push_back(as_int(v));
  return out;
}

Graph graph_of(const json& j) {
  const int n = as_int(field(j, "n"));
  if (n < 0) throw InvalidInput("negative vertex count");
  auto es = as_edges(field(j, "edges"));
  return Graph(n, es);
}

template <typename T, typename F>
T wrap(const std::string& text, F&& f) {
  json j = parse(text);
  try {
    return f(j);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad document: ") + e.what());
  }
}

}  // namespace

std::string to_string(ColoringMode m) { return m == ColoringMode::Proper ? "proper" : "linear-forest"; }

std::optional<ColoringMode> coloring_mode_from_string(const std::string& s) {
  if (s == "proper") return ColoringMode::Proper;
  if (s == "linear-forest") return ColoringMode::LinearForest;
  return std::nullopt;
}

std::string to_json(const Graph& g) { return graph_json(g).dump(); }

std::string to_json(const Diagram& d) {
  json j = graph_json(d.graph);
  json bs = json::array();
  for (const auto& b : d.blocks) bs.push_back({{"order", b.order}, {"closed", b.closed}});
  j["blocks"] = bs;
  return j.dump();
}

std::string to_json(const EdgeColoring& c) {
  json cs = json::array();
  for (const auto& [e, col] : c.colors) cs.push_back({e.u, e.v, col});
  return json{{"k", c.k}, {"mode", to_string(c.mode)}, {"colors", cs}}.dump();
}

std::string to_json(const Decomposition& d) {
  json ps = json::array();
  for (const auto& p : d.parts) ps.push_back({{"kind", to_string(p.kind)}, {"edges", edges_json(p.edges)}});
  return json{{"parts", ps}}.dump();
}

std::string to_json(const ColorTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json w = json::array();
    for (const auto& x : s.writes) w.push_back({x.edge.u, x.edge.v, x.color});
    json j = {{"kind", to_string(s.kind)}, {"vertices", s.vertices}, {"writes", w}, {"method", s.method},
              {"diagnostic", s.diagnostic}};
    j["config"] = s.config ? json(to_string(*s.config)) : json(nullptr);
    steps.push_back(j);
  }
  return json{{"steps", steps}}.dump();
}

std::string to_json(const ConfigurationMatch& m) {
  json roles = json::object();
  for (const auto& [name, v] : m.roles) roles[name] = v;
  json cr = json::array();
  for (const auto& c : m.crossings) cr.push_back({{c.first.u, c.first.v}, {c.second.u, c.second.v}});
  json j = {{"id", to_string(m.id)}, {"roles", roles}, {"edges", edges_json(m.edges)}, {"crossings", cr}};
  if (m.xy_addable) j["xy_addable"] = *m.xy_addable;
  return j.dump();
}

GraphDocument parse_graph_document(const std::string& text) {
  return wrap<GraphDocument>(text, [](const json& j) {
    GraphDocument doc{graph_of(j), std::nullopt};
    if (j.contains("blocks")) {
      Diagram d{doc.graph, {}};
      for (const json& b : j.at("blocks")) {
        BlockOrder bo;
        bo.order = as_vertices(field(b, "order"));
        bo.closed = field(b, "closed").get<bool>();
        d.blocks.push_back(std::move(bo));
      }
      doc.diagram = std::move(d);
    }
    return doc;
  });
}

Graph parse_graph(const std::string& text) { return parse_graph_document(text).graph; }

Diagram parse_diagram(const std::string& text) {
  auto doc = parse_graph_document(text);
  if (!doc.diagram) throw InvalidInput("document has no \"blocks\"");
  return *doc.diagram;
}

EdgeColoring parse_coloring(const std::string& text) {
  return wrap<EdgeColoring>(text, [](const json& j) {
    EdgeColoring c;
    c.k = as_int(field(j, "k"));
    auto mode = coloring_mode_from_string(field(j, "mode").get<std::string>());
    if (!mode) throw InvalidInput("unknown coloring mode");
    c.mode = *mode;
    for (const json& t : field(j, "colors")) {
      if (!t.is_array() || t.size() != 3) throw InvalidInput("a color entry is [u, v, c]");
      c.colors[Edge(as_int(t[0]), as_int(t[1]))] = as_int(t[2]);
    }
    return c;
  });
}

Decomposition parse_decomposition(const std::string& text) {
  return wrap<Decomposition>(text, [](const json& j) {
    Decomposition d;
    for (const json& p : field(j, "parts")) {
      auto kind = part_kind_from_string(field(p, "kind").get<std::string>());
      if (!kind) throw InvalidInput("unknown part kind");
      d.parts.push_back({*kind, as_edges(field(p, "edges"))});
    }
    return d;
  });
}

ColorTrace parse_trace(const std::string& text) {
  return wrap<ColorTrace>(text, [](const json& j) {
    ColorTrace t;
    for (const json& s : field(j, "steps")) {
      TraceStep st;
      const std::string kind = field(s, "kind").get<std::string>();
      bool known = false;
      for (StepKind k : {StepKind::LowEdgeDegree, StepKind::BlockSplit, StepKind::Configuration,
                         StepKind::VizingBase, StepKind::ExactFallback})
        if (to_string(k) == kind) {
          st.kind = k;
          known = true;
        }
      if (!known) throw InvalidInput("unknown step kind " + kind);
      if (s.contains("config") && !s.at("config").is_null()) {
        st.config = config_id_from_string(s.at("config").get<std::string>());
        if (!st.config) throw InvalidInput("unknown configuration");
      }
      st.vertices = as_vertices(field(s, "vertices"));
      for (const json& w : field(s, "writes")) {
        if (!w.is_array() || w.size() != 3) throw InvalidInput("a write is [u, v, c]");
        st.writes.push_back({Edge(as_int(w[0]), as_int(w[1])), as_int(w[2])});
      }
      st.method = s.value("method", "");
      st.diagnostic = s.value("diagnostic", false);
      t.steps.push_back(std::move(st));
    }
    return t;
  });
}

}  // namespace pog
