#pragma once

// Normal-arc bookkeeping shared by tracing, the intersection arrangement and
// the cut computation. Within a triangle, points on side j are indexed by
// their position along the boundary traversal of that side.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lamistrat/triangulation.hpp"

namespace lamistrat::detail {

using Counts = std::array<std::int64_t, 3>;

inline Counts side_weights(const Triangle& tri, std::span<const std::int64_t> w) {
  return {w[tri[0].edge], w[tri[1].edge], w[tri[2].edge]};
}

// Number of arcs at corner j (between side j and side j+1).
inline Counts corner_counts(const Counts& w) {
  return {(w[0] + w[1] - w[2]) / 2, (w[1] + w[2] - w[0]) / 2, (w[2] + w[0] - w[1]) / 2};
}

// Edge-order index of the traversal position p on a side of weight n.
inline std::int64_t to_edge_order(const SignedEdge& s, std::int64_t n, std::int64_t p) {
  return s.forward ? p : n - 1 - p;
}

struct SidePos {
  int side;
  std::int64_t pos;
};

// The other end of the arc leaving traversal position p of `side`.
inline SidePos arc_partner(const Counts& w, const Counts& c, int side, std::int64_t p) {
  const int prev = (side + 2) % 3;
  const int next = (side + 1) % 3;
  if (p < c[prev]) return {prev, w[prev] - 1 - p};
  return {next, w[side] - 1 - p};
}

// Union-find over arc endpoints; each class is one closed component.
struct Trace {
  std::vector<std::int64_t> offset;     // first point id of each edge
  std::vector<std::int32_t> component;  // point id -> component index
  std::vector<std::vector<std::int64_t>> weights;  // per component
};

Trace trace_components(const Triangulation& tri, std::span<const std::int64_t> w);

}  // namespace lamistrat::detail
