#include "denthex/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace denthex {

namespace {

enum class EdgeKind { Horizontal, Slash, Diagonal };

struct Edge {
  EdgeKind kind;
  int x, y;
  auto operator<=>(const Edge&) const = default;
};

// the three edges of a cell, keyed so that shared edges coincide
std::array<Edge, 3> cell_edges(const UnitTriangle& t) {
  if (t.up)
    return {Edge{EdgeKind::Horizontal, t.x, t.y}, Edge{EdgeKind::Slash, t.x, t.y},
            Edge{EdgeKind::Diagonal, t.x, t.y}};
  return {Edge{EdgeKind::Horizontal, t.x, t.y + 1}, Edge{EdgeKind::Slash, t.x + 1, t.y},
          Edge{EdgeKind::Diagonal, t.x, t.y}};
}

Edge shared_edge(const Lozenge& lz) {
  const auto& [u, d] = lz;
  if (d.x == u.x && d.y == u.y) return {EdgeKind::Diagonal, u.x, u.y};
  if (d.x == u.x - 1 && d.y == u.y) return {EdgeKind::Slash, u.x, u.y};
  if (d.x == u.x && d.y == u.y - 1) return {EdgeKind::Horizontal, u.x, u.y};
  throw Error(Errc::InvalidCellPattern, "lozenge cells are not adjacent");
}

std::set<Edge> drawn_edges(const Region& r, const std::optional<std::vector<Lozenge>>& tiling) {
  std::set<Edge> edges;
  for (const auto& t : r.cells())
    for (const auto& e : cell_edges(t)) edges.insert(e);
  if (tiling)
    for (const auto& lz : *tiling) edges.erase(shared_edge(lz));
  return edges;
}

}  // namespace

std::string render_ascii(const Region& r, const std::optional<std::vector<Lozenge>>& tiling) {
  if (r.empty()) return "(empty region)\n";
  std::set<Edge> edges = drawn_edges(r, tiling);

  int y_top = r.cells()[0].y + 1, y_bot = r.cells()[0].y;
  for (const auto& t : r.cells()) {
    y_top = std::max(y_top, t.y + 1);
    y_bot = std::min(y_bot, t.y);
  }
  // vertex (px,py): text column 2*px + py, underscores in the row whose
  // bottom line is py, slants in the band between py and py+1
  std::map<std::pair<int, int>, char> canvas;  // (row, col) -> glyph
  auto put = [&](int row, int col, char ch, bool overwrite) {
    auto key = std::make_pair(row, col);
    if (overwrite || !canvas.count(key)) canvas[key] = ch;
  };
  for (const auto& e : edges) {
    if (e.kind == EdgeKind::Horizontal) {
      int row = y_top - e.y, col = 2 * e.x + e.y;
      put(row, col, '_', false);
      put(row, col + 1, '_', false);
    }
  }
  for (const auto& e : edges) {
    if (e.kind == EdgeKind::Slash) put(y_top - e.y, 2 * e.x + e.y, '/', true);
    if (e.kind == EdgeKind::Diagonal) put(y_top - e.y, 2 * e.x + e.y + 1, '\\', true);
  }

  int cmin = canvas.begin()->first.second, cmax = cmin;
  int rmax = 0;
  for (const auto& [key, ch] : canvas) {
    cmin = std::min(cmin, key.second);
    cmax = std::max(cmax, key.second);
    rmax = std::max(rmax, key.first);
  }
  std::string out;
  for (int row = 0; row <= rmax; ++row) {
    std::string line;
    for (int col = cmin; col <= cmax; ++col) {
      auto it = canvas.find({row, col});
      line += it == canvas.end() ? ' ' : it->second;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    if (!(row == 0 && line.empty())) {
      out += line;
      out += '\n';
    }
  }
  return out;
}

namespace {

std::pair<double, double> vertex_xy(int px, int py, int y_top) {
  return {px + py * 0.5, (y_top - py) * 0.8660254037844386};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string polygon(const std::vector<std::pair<double, double>>& pts, const std::string& style) {
  std::string s = "  <polygon points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += fmt(pts[i].first) + ',' + fmt(pts[i].second);
  }
  s += "\" " + style + "/>\n";
  return s;
}

std::vector<std::pair<double, double>> cell_points(const UnitTriangle& t, int y_top) {
  if (t.up)
    return {vertex_xy(t.x, t.y, y_top), vertex_xy(t.x + 1, t.y, y_top),
            vertex_xy(t.x, t.y + 1, y_top)};
  return {vertex_xy(t.x + 1, t.y, y_top), vertex_xy(t.x + 1, t.y + 1, y_top),
          vertex_xy(t.x, t.y + 1, y_top)};
}

}  // namespace

std::string render_svg(const Region& r, const std::optional<std::vector<Lozenge>>& tiling) {
  std::ostringstream out;
  int y_top = 1, y_bot = 0;
  double xmin = 0, xmax = 1, ymax = 1;
  if (!r.empty()) {
    y_top = r.cells()[0].y + 1;
    y_bot = r.cells()[0].y;
    for (const auto& t : r.cells()) {
      y_top = std::max(y_top, t.y + 1);
      y_bot = std::min(y_bot, t.y);
    }
    bool first = true;
    for (const auto& t : r.cells()) {
      for (auto [px, py] : cell_points(t, y_top)) {
        if (first) {
          xmin = xmax = px;
          ymax = py;
          first = false;
        }
        xmin = std::min(xmin, px);
        xmax = std::max(xmax, px);
        ymax = std::max(ymax, py);
      }
    }
  }
  const double pad = 0.2, scale = 40.0;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(xmin - pad) << " "
      << fmt(-pad) << " " << fmt(xmax - xmin + 2 * pad) << " " << fmt(ymax + 2 * pad)
      << "\" width=\"" << fmt((xmax - xmin + 2 * pad) * scale) << "\" height=\""
      << fmt((ymax + 2 * pad) * scale) << "\">\n";
  for (const auto& t : r.cells()) {
    const char* fill = t.up ? "#f4f4f4" : "#e0e0e0";
    out << polygon(cell_points(t, y_top),
                   std::string("fill=\"") + fill + "\" stroke=\"#999999\" stroke-width=\"0.02\"");
  }
  if (tiling) {
    for (const auto& [u, d] : *tiling) {
      // quadrilateral = union of the two triangles minus the shared edge
      std::vector<std::pair<double, double>> pts;
      const char* fill;
      if (d.x == u.x && d.y == u.y) {
        pts = {vertex_xy(u.x, u.y, y_top), vertex_xy(u.x + 1, u.y, y_top),
               vertex_xy(u.x + 1, u.y + 1, y_top), vertex_xy(u.x, u.y + 1, y_top)};
        fill = "#9ecae1";
      } else if (d.x == u.x - 1 && d.y == u.y) {
        pts = {vertex_xy(u.x - 1, u.y + 1, y_top), vertex_xy(u.x, u.y, y_top),
               vertex_xy(u.x + 1, u.y, y_top), vertex_xy(u.x, u.y + 1, y_top)};
        fill = "#a1d99b";
      } else if (d.x == u.x && d.y == u.y - 1) {
        pts = {vertex_xy(u.x + 1, u.y - 1, y_top), vertex_xy(u.x + 1, u.y, y_top),
               vertex_xy(u.x, u.y + 1, y_top), vertex_xy(u.x, u.y, y_top)};
        fill = "#fdae6b";
      } else {
        throw Error(Errc::InvalidCellPattern, "lozenge cells are not adjacent");
      }
      out << polygon(pts, std::string("fill=\"") + fill +
                              "\" fill-opacity=\"0.85\" stroke=\"#333333\" stroke-width=\"0.03\"");
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace denthex
