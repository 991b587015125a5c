#include "crossmap/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "crossmap/bijection.hpp"
#include "crossmap/error.hpp"

namespace crossmap {

namespace {

std::array<Point, 3> source_tent(const Arc& arc) {
  if (arc.is_loop()) {
    const int u = arc.left;
    return {Point{2 * u - 2, 0}, Point{2 * u - 1, 1}, Point{2 * u, 0}};
  }
  const Point apex{arc.left + arc.right - 1, arc.right - arc.left + 1};
  return {Point{2 * arc.left - 1, 1}, apex, Point{2 * arc.right - 1, 1}};
}

std::array<Point, 3> image_tent(const Arc& arc) {
  const Point apex{arc.left + arc.right - 2, arc.right - arc.left};
  return {Point{2 * arc.left - 2, 0}, apex, Point{2 * arc.right - 2, 0}};
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<StripArc> render_strip_coordinates(const PartialPartition& p) {
  std::vector<StripArc> out;
  for (const auto& arc : arcs_enhanced(p)) out.push_back({Layer::pi, arc, source_tent(arc)});
  for (const auto& arc : arcs_classical(forward(p))) out.push_back({Layer::pi_hat, arc, image_tent(arc)});
  return out;
}

std::string render_overlay(const PartialPartition& p, const RenderOptions& options) {
  if (p.n() > kMaxDiagramSize) {
    fail(ErrorCode::TooLarge, "diagram limited to n <= " + std::to_string(kMaxDiagramSize));
  }
  const auto strip = render_strip_coordinates(p);
  const int n = p.n();
  int top = 1;
  for (const auto& s : strip) top = std::max(top, s.apex().y);

  const int u = std::max(options.unit, 1);
  const auto px = [&](int x) { return (x + 1) * u; };
  const auto py = [&](int y) { return (top + 1 - y) * u; };
  const int width = (2 * n + 2) * u;
  const int height = (top + 2) * u;
  const int radius = std::max(u / 5, 2);
  const int stroke = std::max(u / 8, 1);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "  <title>" << escape(to_text(p)) << " maps to " << escape(to_text(forward(p))) << "</title>\n"
      << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  auto emit_arcs = [&](Layer layer, std::string_view group, std::string_view cls, const std::string& color,
                       std::string_view extra) {
    svg << "  <g class=\"" << group << "\" fill=\"none\" stroke=\"" << escape(color) << "\" stroke-width=\""
        << stroke << '"' << extra << ">\n";
    for (const auto& s : strip) {
      if (s.layer != layer) continue;
      const auto& [a, b, c] = s.polyline;
      svg << "    <path class=\"" << cls << "\" data-arc=\"" << s.arc.left << ',' << s.arc.right << "\" d=\"M "
          << px(a.x) << ' ' << py(a.y) << " L " << px(b.x) << ' ' << py(b.y) << " L " << px(c.x) << ' '
          << py(c.y) << "\"/>\n";
    }
    svg << "  </g>\n";
  };
  emit_arcs(Layer::pi_hat, "pi-hat-arcs", "pi-hat-arc", options.pi_hat_color, "");
  emit_arcs(Layer::pi, "pi-arcs", "pi-arc", options.pi_color, " stroke-dasharray=\"4 3\"");

  svg << "  <g class=\"pi-hat-vertices\" fill=\"" << escape(options.pi_hat_color) << "\">\n";
  for (int j = 1; j <= n + 1; ++j) {
    svg << "    <circle class=\"pi-hat-vertex\" data-element=\"" << j << "\" cx=\"" << px(2 * (j - 1))
        << "\" cy=\"" << py(0) << "\" r=\"" << radius << "\"/>\n";
  }
  svg << "  </g>\n";
  svg << "  <g class=\"pi-vertices\" fill=\"" << escape(options.pi_color) << "\">\n";
  for (int i = 1; i <= n; ++i) {
    if (!p.contains(i)) continue;
    svg << "    <circle class=\"pi-vertex\" data-element=\"" << i << "\" cx=\"" << px(2 * i - 1) << "\" cy=\""
        << py(1) << "\" r=\"" << radius << "\"/>\n";
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

}  // namespace crossmap
