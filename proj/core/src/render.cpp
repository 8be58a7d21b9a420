#include "pog/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

namespace pog {

namespace {

constexpr double kRadius = 120.0;
constexpr double kPad = 40.0;

struct Point {
  double x = 0, y = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

Point on_circle(Point c, int i, int m) {
  const double a = 2 * std::numbers::pi * i / m - std::numbers::pi / 2;
  return {c.x + kRadius * std::cos(a), c.y + kRadius * std::sin(a)};
}

std::optional<Point> intersect(Point p1, Point p2, Point p3, Point p4) {
  const double d = (p2.x - p1.x) * (p4.y - p3.y) - (p2.y - p1.y) * (p4.x - p3.x);
  if (std::abs(d) < 1e-12) return std::nullopt;
  const double t = ((p3.x - p1.x) * (p4.y - p3.y) - (p3.y - p1.y) * (p4.x - p3.x)) / d;
  return Point{p1.x + t * (p2.x - p1.x), p1.y + t * (p2.y - p1.y)};
}

bool consecutive(const std::vector<Vertex>& order, const Edge& e) {
  const std::size_t m = order.size();
  for (std::size_t i = 0; i < m; ++i)
    if (Edge(order[i], order[(i + 1) % m]) == e) return m > 2 || i == 0;
  return false;
}

}  // namespace

std::optional<RenderFormat> render_format_from_string(const std::string& s) {
  if (s == "svg") return RenderFormat::Svg;
  if (s == "dot") return RenderFormat::Dot;
  return std::nullopt;
}

std::string render(const Diagram& d, RenderFormat f) {
  Report r = validate(d);
  if (!r.valid) throw InvalidInput("invalid diagram: " + r.violations.front());
  const Graph& g = d.graph;
  std::set<Edge> crossed;
  for (const auto& c : crossing_pairs(d)) {
    crossed.insert(c.first);
    crossed.insert(c.second);
  }
  const BlockStructure bs = blocks(g);

  std::string out;
  if (f == RenderFormat::Dot) {
    out += "graph pog {\n  node [shape=circle];\n";
    std::vector<char> placed(g.order(), 0);
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
      const auto& order = d.blocks[b].order;
      const Point c{kPad + kRadius + b * (2 * kRadius + kPad), kPad + kRadius};
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (placed[order[i]]) continue;
        placed[order[i]] = 1;
        Point p = on_circle(c, static_cast<int>(i), static_cast<int>(order.size()));
        out += "  " + std::to_string(order[i]) + " [pos=\"" + fmt(p.x / 72) + "," + fmt(-p.y / 72) + "!\"];\n";
      }
    }
    for (Vertex v = 0; v < g.order(); ++v)
      if (!placed[v]) out += "  " + std::to_string(v) + ";\n";
    for (const Edge& e : g.edges()) {
      out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
      if (crossed.count(e)) out += " [color=red]";
      out += ";\n";
    }
    out += "}\n";
    return out;
  }

  const double width = 2 * kPad + std::max<std::size_t>(d.blocks.size(), 1) * (2 * kRadius + kPad);
  const double height = 2 * (kPad + kRadius);
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
         "\">\n";
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const auto& order = d.blocks[b].order;
    const int m = static_cast<int>(order.size());
    const Point c{kPad + kRadius + b * (2 * kRadius + kPad), kPad + kRadius};
    std::map<Vertex, Point> at;
    for (int i = 0; i < m; ++i) at[order[i]] = on_circle(c, i, m);
    out += "  <g class=\"block\">\n";
    out += "    <circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) + "\" r=\"" + fmt(kRadius) +
           "\" fill=\"none\" stroke=\"#ddd\" stroke-dasharray=\"4 4\"/>\n";
    // Edges of this block, found through its vertex set.
    std::vector<Edge> es;
    for (const Block& bl : bs.blocks)
      if (std::is_permutation(bl.vertices.begin(), bl.vertices.end(), order.begin(), order.end())) es = bl.edges;
    for (const Edge& e : es) {
      const Point p = at[e.u], q = at[e.v];
      if (consecutive(order, e) && m > 2) {
        // Arc along the circle, going the short way between neighbours.
        int iu = static_cast<int>(std::find(order.begin(), order.end(), e.u) - order.begin());
        int iv = static_cast<int>(std::find(order.begin(), order.end(), e.v) - order.begin());
        Point from = p, to = q;
        if ((iu + 1) % m != iv) std::swap(from, to);
        out += "    <path class=\"boundary\" d=\"M " + fmt(from.x) + " " + fmt(from.y) + " A " + fmt(kRadius) + " " +
               fmt(kRadius) + " 0 0 1 " + fmt(to.x) + " " + fmt(to.y) + "\" fill=\"none\" stroke=\"black\"/>\n";
      } else {
        const bool x = crossed.count(e) > 0;
        out += std::string("    <line class=\"") + (x ? "chord crossed" : "chord") + "\" x1=\"" + fmt(p.x) +
               "\" y1=\"" + fmt(p.y) + "\" x2=\"" + fmt(q.x) + "\" y2=\"" + fmt(q.y) + "\" stroke=\"" +
               (x ? "red" : "black") + "\"/>\n";
      }
    }
    for (const auto& cp : crossing_pairs(d)) {
      if (!at.count(cp.first.u) || !at.count(cp.first.v) || !at.count(cp.second.u) || !at.count(cp.second.v)) continue;
      if (!std::count_if(es.begin(), es.end(), [&](const Edge& e) { return e == cp.first; })) continue;
      auto p = intersect(at[cp.first.u], at[cp.first.v], at[cp.second.u], at[cp.second.v]);
      if (p)
        out += "    <circle class=\"crossing\" cx=\"" + fmt(p->x) + "\" cy=\"" + fmt(p->y) +
               "\" r=\"5\" fill=\"none\" stroke=\"red\"/>\n";
    }
    for (int i = 0; i < m; ++i) {
      const Point p = at[order[i]];
      out += "    <circle class=\"vertex\" cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) +
             "\" r=\"10\" fill=\"white\" stroke=\"black\"/>\n";
      out += "    <text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y + 4) + "\" text-anchor=\"middle\" font-size=\"11\">" +
             std::to_string(order[i]) + "</text>\n";
    }
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pog
