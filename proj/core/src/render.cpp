#include "thhku/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace thhku {

namespace {

std::string fixed(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

struct Point {
  double x, y;
};

Point place(const BlockNode& n, int origin) { return {(n.degree - origin) / 4.0, n.h + 0.2 * n.j}; }

int origin_of(const TorsionBlock& b, DiagramLayout layout) { return layout.origin < 0 ? b.lo : layout.origin; }

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_tikz(const TorsionBlock& b, DiagramLayout layout) {
  const int origin = origin_of(b, layout);
  std::ostringstream out;
  out << "\\begin{tikzpicture}\n";
  for (const auto& n : b.nodes) {
    const Point pt = place(n, origin);
    out << "  \\node[inner sep=1pt] (" << n.tikz_id() << ") at (" << fixed(pt.x, 1) << "," << fixed(pt.y, 1) << ") {";
    if (n.named) out << "\\footnotesize$\\sigma u \\mu_{" << n.N << "}$";
    else out << (n.from_l ? "$\\circ$" : "$\\bullet$");
    out << "};\n";
  }
  for (const auto& e : b.edges)
    out << "  \\draw (" << b.nodes[e.from].tikz_id() << ") to" << (e.bent ? "[bend right=8]" : "") << " ("
        << b.nodes[e.to].tikz_id() << ");\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

std::string render_svg(const TorsionBlock& b, DiagramLayout layout) {
  const int origin = origin_of(b, layout);
  constexpr double scale = 60.0, margin = 40.0;
  double max_x = 0, max_y = 0;
  for (const auto& n : b.nodes) {
    const Point pt = place(n, origin);
    max_x = std::max(max_x, pt.x);
    max_y = std::max(max_y, pt.y);
  }
  const double width = 2 * margin + scale * max_x, height = 2 * margin + scale * max_y;
  auto sx = [&](double x) { return fixed(margin + scale * x, 2); };
  auto py = [&](double y) { return height - margin - scale * y; };
  auto sy = [&](double y) { return fixed(py(y), 2); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width, 2) << "\" height=\"" << fixed(height, 2)
      << "\" viewBox=\"0 0 " << fixed(width, 2) << " " << fixed(height, 2) << "\">\n";
  out << "  <title>T_" << b.n << " for p = " << b.p << ", copy " << b.k << "</title>\n";
  out << "  <g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  for (const auto& e : b.edges) {
    const Point a = place(b.nodes[e.from], origin), c = place(b.nodes[e.to], origin);
    const char* cls = e.kind == EdgeKind::U ? "u-edge" : "p-edge";
    if (e.bent) {
      // Quadratic curve bowing to the right of the travel direction.
      const double mx = (a.x + c.x) / 2, my = (a.y + c.y) / 2;
      const double dx = c.x - a.x, dy = c.y - a.y;
      const double bx = mx + 0.07 * dy, by = my - 0.07 * dx;
      out << "    <path class=\"" << cls << " bent\" d=\"M " << sx(a.x) << " " << sy(a.y) << " Q " << sx(bx) << " "
          << sy(by) << " " << sx(c.x) << " " << sy(c.y) << "\"/>\n";
    } else {
      out << "    <line class=\"" << cls << "\" x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(c.x)
          << "\" y2=\"" << sy(c.y) << "\"/>\n";
    }
  }
  out << "  </g>\n";
  for (const auto& n : b.nodes) {
    const Point pt = place(n, origin);
    if (n.named) {
      out << "  <text class=\"generator\" x=\"" << sx(pt.x) << "\" y=\"" << fixed(py(pt.y) + 14, 2)
          << "\" font-size=\"11\" text-anchor=\"middle\">" << xml_escape(n.name()) << "</text>\n";
      out << "  <circle class=\"node named\" cx=\"" << sx(pt.x) << "\" cy=\"" << sy(pt.y)
          << "\" r=\"2\" fill=\"black\"/>\n";
    } else {
      out << "  <circle class=\"node " << (n.from_l ? "circ" : "bullet") << "\" cx=\"" << sx(pt.x) << "\" cy=\""
          << sy(pt.y) << "\" r=\"3\" " << (n.from_l ? "fill=\"white\" stroke=\"black\"" : "fill=\"black\"") << ">"
          << "<title>" << xml_escape(n.name()) << "</title></circle>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace thhku
