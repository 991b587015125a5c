#pragma once

#include <array>
#include <string>
#include <vector>

#include "crossmap/arcs.hpp"
#include "crossmap/partition.hpp"

namespace crossmap {

inline constexpr int kMaxDiagramSize = 40;

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class Layer { pi, pi_hat };

/// One tent-shaped arc on the overlay strip, in grid units.
///
/// Element j of the image sits on the baseline at (2(j-1), 0); element i of
/// the source sits one unit up at (2i-1, 1). The source arc (x, y) runs from
/// (2x-1, 1) up to the apex (x+y-1, y-x+1) and back down to (2y-1, 1). That
/// apex is also the apex of the image arc (x, y+1), whose legs are the
/// source legs extended down to the baseline. A loop (u, u) is drawn as the
/// width-2 tent through its own vertex, (2u-2, 0) to (2u-1, 1) to (2u, 0).
struct StripArc {
  Layer layer = Layer::pi;
  Arc arc;
  std::array<Point, 3> polyline;

  const Point& apex() const noexcept { return polyline[1]; }
};

/// Enhanced arcs of p (layer pi) followed by classical arcs of forward(p)
/// (layer pi_hat), each group sorted by left endpoint.
std::vector<StripArc> render_strip_coordinates(const PartialPartition& p);

struct RenderOptions {
  std::string pi_color = "#1f5fbf";
  std::string pi_hat_color = "#222222";
  int unit = 24;  // pixels per grid unit
};

/// Standalone SVG 1.1 overlay of p and forward(p). Byte-stable for fixed
/// input. Throws TooLarge when n exceeds kMaxDiagramSize.
std::string render_overlay(const PartialPartition& p, const RenderOptions& options = {});

}  // namespace crossmap
