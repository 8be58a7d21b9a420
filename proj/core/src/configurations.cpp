#include "pog/configurations.hpp"

#include <algorithm>
#include <functional>

namespace pog {

namespace {

struct Spec {
  ConfigId id;
  std::vector<std::string> roles;
  std::vector<int> solid;  // exact degree, 0 = hollow
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::string>> optional;
  std::vector<std::string> frame;
};

ConfigurationPattern build(const Spec& s) {
  ConfigurationPattern p;
  p.id = s.id;
  p.roles = s.roles;
  auto idx = [&](const std::string& r) {
    return static_cast<int>(std::find(s.roles.begin(), s.roles.end(), r) - s.roles.begin());
  };
  for (const auto& [a, b] : s.edges) p.edges.emplace_back(idx(a), idx(b));
  for (const auto& [a, b] : s.optional) p.optional_edges.emplace_back(idx(a), idx(b));
  for (const auto& r : s.frame) p.frame.push_back(idx(r));
  for (std::size_t i = 0; i < s.roles.size(); ++i) {
    const int r = static_cast<int>(i);
    if (s.solid[i] > 0) {
      p.degrees.push_back({DegreeConstraint::Kind::Exact, s.solid[i]});
    } else {
      int listed = 0;
      for (auto [a, b] : p.edges) listed += (a == r) + (b == r);
      p.degrees.push_back({DegreeConstraint::Kind::AtLeast, listed});
    }
  }
  return p;
}

std::vector<ConfigurationPattern> make_catalog() {
  const std::vector<Spec> specs = {
      {ConfigId::G1, {"u", "v"}, {2, 2}, {{"u", "v"}}, {}, {}},
      {ConfigId::G2, {"u", "w", "x"}, {2, 3, 0}, {{"u", "w"}, {"u", "x"}, {"w", "x"}}, {}, {}},
      {ConfigId::G3,
       {"u", "v", "x", "y"},
       {2, 2, 0, 0},
       {{"u", "x"}, {"u", "y"}, {"v", "x"}, {"v", "y"}},
       {{"x", "y"}},
       {}},
      {ConfigId::G4,
       {"u", "x", "y", "v", "w"},
       {4, 2, 2, 0, 0},
       {{"u", "x"}, {"u", "y"}, {"u", "v"}, {"u", "w"}, {"x", "v"}, {"y", "w"}},
       {},
       {}},
      {ConfigId::G5,
       {"u", "v", "w", "x", "z"},
       {2, 4, 4, 2, 0},
       {{"u", "v"}, {"u", "w"}, {"v", "w"}, {"w", "x"}, {"x", "z"}},
       {},
       {}},
      {ConfigId::G6,
       {"u", "v", "x0", "y0"},
       {3, 3, 0, 0},
       {{"u", "v"}, {"u", "x0"}, {"u", "y0"}, {"v", "x0"}, {"v", "y0"}},
       {{"x0", "y0"}},
       {"x0", "u", "v", "y0"}},
      {ConfigId::G12,
       {"u", "v", "w", "x", "y"},
       {2, 4, 4, 0, 0},
       {{"u", "v"}, {"u", "w"}, {"v", "w"}, {"v", "x"}, {"v", "y"}, {"w", "x"}, {"w", "y"}},
       {{"x", "y"}},
       {"x", "v", "u", "w", "y"}},
      {ConfigId::G13,
       {"u", "v", "w", "x", "y"},
       {2, 4, 3, 0, 0},
       {{"u", "v"}, {"u", "x"}, {"v", "w"}, {"v", "x"}, {"v", "y"}, {"w", "x"}, {"w", "y"}},
       {},
       {"x", "u", "v", "w", "y"}},
      {ConfigId::G16,
       {"u", "v", "w", "z", "x", "y"},
       {2, 4, 4, 2, 0, 0},
       {{"u", "x"}, {"u", "w"}, {"v", "w"}, {"v", "z"}, {"v", "y"}, {"v", "x"}, {"w", "y"}, {"w", "x"}, {"z", "y"}},
       {},
       {"x", "u", "w", "v", "z", "y"}},
      {ConfigId::G17,
       {"u", "a", "z", "w", "v", "x", "y"},
       {2, 2, 2, 5, 5, 0, 0},
       {{"u", "w"},
        {"u", "v"},
        {"a", "v"},
        {"a", "y"},
        {"w", "z"},
        {"w", "v"},
        {"w", "x"},
        {"w", "y"},
        {"x", "z"},
        {"x", "v"},
        {"v", "y"}},
       {},
       {"x", "z", "w", "u", "v", "a", "y"}},
  };
  std::vector<ConfigurationPattern> out;
  for (const auto& s : specs) out.push_back(build(s));
  return out;
}

bool degree_ok(const Graph& g, Vertex v, const DegreeConstraint& c) {
  return c.kind == DegreeConstraint::Kind::Exact ? g.degree(v) == c.value : g.degree(v) >= c.value;
}

std::optional<ConfigurationMatch> match(const Graph& g, const ConfigurationPattern& p) {
  const int r = static_cast<int>(p.roles.size());
  std::vector<Vertex> a(r, -1);
  std::vector<char> used(g.order(), 0);

  std::function<bool(int)> place = [&](int i) {
    if (i == r) return true;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (used[v] || !degree_ok(g, v, p.degrees[i])) continue;
      bool ok = true;
      for (auto [s, t] : p.edges) {
        int other = s == i ? t : (t == i ? s : -1);
        if (other >= 0 && other < i && !g.has_edge(v, a[other])) ok = false;
      }
      for (auto [s, t] : p.non_edges) {
        int other = s == i ? t : (t == i ? s : -1);
        if (other >= 0 && other < i && g.has_edge(v, a[other])) ok = false;
      }
      if (!ok) continue;
      a[i] = v;
      used[v] = 1;
      if (place(i + 1)) return true;
      used[v] = 0;
    }
    a[i] = -1;
    return false;
  };
  if (!place(0)) return std::nullopt;

  ConfigurationMatch m;
  m.id = p.id;
  m.assignment = a;
  for (int i = 0; i < r; ++i) m.roles.emplace_back(p.roles[i], a[i]);
  for (auto [s, t] : p.edges) m.edges.emplace_back(a[s], a[t]);
  for (auto [s, t] : p.optional_edges) {
    bool present = g.has_edge(a[s], a[t]);
    m.optional_present.push_back(present);
    if (present) m.edges.emplace_back(a[s], a[t]);
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

}  // namespace

std::string to_string(ConfigId id) {
  switch (id) {
    case ConfigId::G1: return "G1";
    case ConfigId::G2: return "G2";
    case ConfigId::G3: return "G3";
    case ConfigId::G4: return "G4";
    case ConfigId::G5: return "G5";
    case ConfigId::G6: return "G6";
    case ConfigId::G12: return "G12";
    case ConfigId::G13: return "G13";
    case ConfigId::G16: return "G16";
    case ConfigId::G17: return "G17";
  }
  return "?";
}

std::optional<ConfigId> config_id_from_string(const std::string& s) {
  for (const auto& p : catalog())
    if (to_string(p.id) == s) return p.id;
  return std::nullopt;
}

Vertex ConfigurationMatch::role(const std::string& name) const {
  for (const auto& [n, v] : roles)
    if (n == name) return v;
  throw InvalidInput("no role " + name);
}

const std::vector<ConfigurationPattern>& catalog() {
  static const std::vector<ConfigurationPattern> c = make_catalog();
  return c;
}

const ConfigurationPattern& pattern(ConfigId id) {
  for (const auto& p : catalog())
    if (p.id == id) return p;
  throw InvalidInput("unknown configuration");
}

const std::vector<ConfigId>& coloring_patterns() {
  static const std::vector<ConfigId> ids = {ConfigId::G3,  ConfigId::G6, ConfigId::G12, ConfigId::G13,
                                            ConfigId::G4,  ConfigId::G5, ConfigId::G16, ConfigId::G17};
  return ids;
}

std::optional<ConfigurationMatch> match_pattern(const Graph& g, ConfigId id) { return match(g, pattern(id)); }

std::optional<ConfigurationMatch> find_configuration(const Diagram& d, const std::vector<ConfigId>& allowed) {
  Report r = validate(d);
  if (!r.valid) throw InvalidInput("invalid diagram: " + r.violations.front());
  for (const auto& p : catalog()) {
    if (std::find(allowed.begin(), allowed.end(), p.id) == allowed.end()) continue;
    auto m = match(d.graph, p);
    if (!m) continue;
    if (p.id == ConfigId::G3 && !m->optional_present[0]) {
      Edge xy(m->role("x"), m->role("y"));
      auto order = spliced_order(d);
      m->xy_addable = valid_on_order(d.graph.plus_edge(xy), order);
    }
    for (const auto& c : crossing_pairs(d))
      if (std::binary_search(m->edges.begin(), m->edges.end(), c.first) &&
          std::binary_search(m->edges.begin(), m->edges.end(), c.second))
        m->crossings.push_back(c);
    return m;
  }
  return std::nullopt;
}

bool match_holds(const Graph& g, const ConfigurationMatch& m) {
  const auto& p = pattern(m.id);
  if (m.assignment.size() != p.roles.size()) return false;
  std::vector<Vertex> sorted = m.assignment;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : m.assignment)
    if (v < 0 || v >= g.order()) return false;
  for (std::size_t i = 0; i < p.roles.size(); ++i)
    if (!degree_ok(g, m.assignment[i], p.degrees[i])) return false;
  for (auto [s, t] : p.edges)
    if (!g.has_edge(m.assignment[s], m.assignment[t])) return false;
  for (auto [s, t] : p.non_edges)
    if (g.has_edge(m.assignment[s], m.assignment[t])) return false;
  return true;
}

}  // namespace pog
