#include "cli.h"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <set>

namespace tamari::cli {

namespace {

const char* kBar = "̄";  // combining macron for j-bar labels

std::string svg_open(double w, double h) {
  return fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
      "viewBox=\"0 0 {0:.0f} {1:.0f}\">\n"
      "<rect x=\"0\" y=\"0\" width=\"{0:.0f}\" height=\"{1:.0f}\" fill=\"white\"/>\n",
      w, h);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

std::string tree_svg(const std::vector<Tree>& trees, const IndexPair& p) {
  const auto nodes = p.merged();
  const double step = 32, pad = 24;
  const double pw = std::max(160.0, step * (nodes.size() - 1) + 2 * pad);
  const double ph = std::max(110.0, pw * 0.45 + 40);
  const int cols = std::max(1, std::min<int>(4, static_cast<int>(trees.size())));
  const int rows = (static_cast<int>(trees.size()) + cols - 1) / cols;
  const double gap = 18;
  std::string s = svg_open(cols * (pw + gap), std::max(1, rows) * ph + 24);
  s += fmt::format("<text x=\"8\" y=\"16\" font-family=\"sans-serif\" font-size=\"12\">{} mode {} ({} trees)</text>\n",
                   p.str(), mode_name(p.mode()), trees.size());
  auto xpos = [&](int v, Side side) {
    for (size_t k = 0; k < nodes.size(); ++k)
      if (nodes[k].value == v && nodes[k].side == side) return pad + step * k;
    return pad;
  };
  const double span = step * nodes.size();
  for (size_t t = 0; t < trees.size(); ++t) {
    double ox = (t % cols) * (pw + gap), oy = 24 + (t / cols) * ph, base = ph - 30;
    s += fmt::format("<g transform=\"translate({:.1f},{:.1f})\">\n", ox, oy);
    s += fmt::format("<text x=\"6\" y=\"14\" font-family=\"sans-serif\" font-size=\"11\">T{}</text>\n", t + 1);
    s += "<g fill=\"none\" stroke=\"#2a5caa\" stroke-width=\"1.5\">\n";
    auto arc = [&](double x1, double x2) {
      double r = (x2 - x1) / 2;
      s += fmt::format("<path d=\"M {:.1f} {:.1f} A {:.1f} {:.1f} 0 0 1 {:.1f} {:.1f}\"/>\n", x1, base, r, r, x2, base);
    };
    for (const auto& a : trees[t]) {
      double xi = xpos(a.i, Side::I), xj = xpos(a.j, Side::J);
      if (xi < xj) {
        arc(xi, xj);
      } else {  // wraps around the cylinder: leave on the right, come back on the left
        double h = std::min(base - 22, (xj + span - xi) / 2);
        s += fmt::format("<path d=\"M {0:.1f} {1:.1f} C {0:.1f} {2:.1f} {3:.1f} {2:.1f} {4:.1f} {2:.1f}\"/>\n", xi, base,
                         base - h, (xi + pw) / 2, pw);
        s += fmt::format("<path d=\"M 0 {1:.1f} C {2:.1f} {1:.1f} {0:.1f} {1:.1f} {0:.1f} {3:.1f}\"/>\n", xj,
                         base - h, xj / 2, base);
      }
    }
    s += "</g>\n";
    for (const auto& nd : nodes) {
      double x = xpos(nd.value, nd.side);
      bool isI = nd.side == Side::I;
      s += fmt::format("<circle cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"4\" fill=\"{}\" stroke=\"black\"/>\n", x, base,
                       isI ? "black" : "white");
      s += fmt::format(
          "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\"{}>{}</text>\n",
          x, base + 18, isI ? "" : " text-decoration=\"overline\"", nd.value);
    }
    s += "</g>\n";
  }
  return s + "</svg>\n";
}

std::string trees_dot(const std::vector<Tree>& trees, const IndexPair& p) {
  std::string s = "graph Trees {\n  node [shape=circle, fontsize=10];\n";
  for (size_t t = 0; t < trees.size(); ++t) {
    s += fmt::format("  subgraph cluster_{} {{\n    label=\"T{}\";\n", t + 1, t + 1);
    for (const auto& nd : p.merged()) {
      if (nd.side == Side::I)
        s += fmt::format("    t{}_i{} [label=\"{}\", style=filled, fillcolor=gray80];\n", t + 1, nd.value, nd.value);
      else
        s += fmt::format("    t{}_j{} [label=\"{}{}\"];\n", t + 1, nd.value, nd.value, kBar);
    }
    for (const auto& a : trees[t]) s += fmt::format("    t{0}_i{1} -- t{0}_j{2};\n", t + 1, a.i, a.j);
    s += "  }\n";
  }
  return s + "}\n";
}

std::string complex_svg(const GeometricComplex& gc, const FinitePoset& order) {
  const auto& pts = gc.coords;
  const int d = gc.ambient_dim();
  const int r = pts.empty() ? 0 : affine_dimension(pts);
  if (r > 2) throw UsageError(fmt::format("svg draws complexes of dimension at most 2, this one has {}", r));
  // two coordinate axes on which the projection keeps the affine hull
  int ax = 0, ay = d > 1 ? 1 : -1;
  for (int a = 0; a < d && r == 2; ++a)
    for (int b = a + 1; b < d; ++b) {
      std::vector<Point> q;
      for (const auto& x : pts) q.push_back({x[a], x[b]});
      if (affine_dimension(q) == 2) {
        ax = a, ay = b;
        a = d;
        break;
      }
    }
  if (r == 1 && d > 1) {
    for (int a = 0; a < d; ++a) {
      std::vector<Point> q;
      for (const auto& x : pts) q.push_back({x[a]});
      if (affine_dimension(q) == 1) {
        ax = a, ay = a == 0 ? 1 : 0;
        break;
      }
    }
  }
  auto proj = [&](const std::vector<double>& x) {
    return std::pair<double, double>{d > 0 ? x[ax] : 0.0, ay >= 0 ? x[ay] : 0.0};
  };
  std::vector<std::pair<double, double>> vp;
  for (const auto& x : pts) {
    std::vector<double> v;
    for (const auto& c : x) v.push_back(to_double(c));
    vp.push_back(proj(v));
  }
  struct Apex {
    int i;
    std::pair<double, double> at;
  };
  std::vector<Apex> apexes;
  for (int i : gc.pair.I()) {
    auto row = apex_normalized(i, gc.height);
    if (std::any_of(row.begin(), row.end(), [](const ExtRat& x) { return x.is_inf(); })) continue;
    std::vector<double> v;
    for (size_t k = 0; k + 1 < row.size(); ++k) v.push_back(to_double(row[k].value()));
    apexes.push_back({i, proj(v)});
  }
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool first = true;
  auto grow = [&](std::pair<double, double> q) {
    if (first) x0 = x1 = q.first, y0 = y1 = q.second, first = false;
    x0 = std::min(x0, q.first), x1 = std::max(x1, q.first);
    y0 = std::min(y0, q.second), y1 = std::max(y1, q.second);
  };
  for (auto q : vp) grow(q);
  for (const auto& a : apexes) grow(a.at);
  const double W = 560, H = 560, m = 50;
  double sc = std::min((W - 2 * m) / std::max(1e-9, x1 - x0), (H - 2 * m) / std::max(1e-9, y1 - y0));
  if (x1 - x0 < 1e-9 && y1 - y0 < 1e-9) sc = 1;
  auto X = [&](double x) { return m + (x - x0) * sc + ((x1 - x0) < 1e-9 ? (W - 2 * m) / 2 : 0); };
  auto Y = [&](double y) { return H - m - (y - y0) * sc - ((y1 - y0) < 1e-9 ? (H - 2 * m) / 2 : 0); };

  std::string s = svg_open(W, H + 20);
  s += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" "
       "orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#444\"/></marker></defs>\n";
  std::string axes = "x" + std::to_string(gc.pair.J()[ax]);
  if (ay >= 0) axes += ", x" + std::to_string(gc.pair.J()[ay]);
  s += fmt::format("<text x=\"8\" y=\"{:.0f}\" font-family=\"sans-serif\" font-size=\"12\">{} mode {}; axes {}</text>\n",
                   H + 12, gc.pair.str(), mode_name(gc.pair.mode()), axes);

  s += "<g fill=\"#cfe0f5\" stroke=\"none\">\n";
  for (const auto& c : gc.cells) {
    if (c.dim != 2) continue;
    double cx = 0, cy = 0;
    for (int v : c.vertices) cx += vp[v].first, cy += vp[v].second;
    cx /= c.vertices.size(), cy /= c.vertices.size();
    auto vs = c.vertices;
    std::sort(vs.begin(), vs.end(), [&](int a, int b) {
      return std::atan2(vp[a].second - cy, vp[a].first - cx) < std::atan2(vp[b].second - cy, vp[b].first - cx);
    });
    std::string pts_attr;
    for (int v : vs) pts_attr += fmt::format("{}{:.2f},{:.2f}", pts_attr.empty() ? "" : " ", X(vp[v].first), Y(vp[v].second));
    s += "<polygon points=\"" + pts_attr + "\"/>\n";
  }
  s += "</g>\n";

  std::set<std::pair<int, int>> covers;
  for (auto cp : order.cover_pairs()) covers.insert(cp);
  s += "<g stroke=\"#444\" stroke-width=\"1.5\">\n";
  for (const auto& c : gc.cells) {
    if (c.dim != 1) continue;
    int a = c.vertices[0], b = c.vertices[1];
    bool arrow = covers.count({a, b}) || covers.count({b, a});
    if (covers.count({b, a})) std::swap(a, b);
    double ax1 = X(vp[a].first), ay1 = Y(vp[a].second), bx = X(vp[b].first), by = Y(vp[b].second);
    double len = std::hypot(bx - ax1, by - ay1), cut = len > 12 ? 6 / len : 0;
    s += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"{}/>\n", ax1, ay1,
                     bx - (bx - ax1) * cut, by - (by - ay1) * cut, arrow ? " marker-end=\"url(#arrow)\"" : "");
  }
  s += "</g>\n";

  s += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (const auto& a : apexes) {
    double x = X(a.at.first), y = Y(a.at.second);
    s += fmt::format("<path d=\"M {:.2f} {:.2f} l 8 8 M {:.2f} {:.2f} l 8 -8\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n",
                     x - 4, y - 4, x - 4, y + 4);
    s += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" fill=\"#c0392b\">v{}</text>\n", x + 6, y + 14, a.i);
  }
  for (size_t t = 0; t < vp.size(); ++t) {
    double x = X(vp[t].first), y = Y(vp[t].second);
    s += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"4\" fill=\"black\"/>\n", x, y);
    s += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">T{}</text>\n", x + 6, y - 6, t + 1);
  }
  s += "</g>\n";
  return s + "</svg>\n";
}

}  // namespace tamari::cli
