#pragma once

#include <array>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace lamistrat {

struct SurfaceSig {
  int genus = 0;
  int punctures = 0;

  int complexity() const { return 3 * genus - 3 + punctures; }

  friend bool operator==(const SurfaceSig&, const SurfaceSig&) = default;
};

// One side of a triangle: an edge index together with the direction in which
// the triangle boundary traverses it.
struct SignedEdge {
  int edge = 0;
  bool forward = true;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

using Triangle = std::array<SignedEdge, 3>;

// Where an edge sits inside the triangle list.
struct Slot {
  int triangle = 0;
  int side = 0;
};

// The four sides of the quadrilateral around a flipped edge, in cyclic order.
// a and b come from the triangle traversing the edge forwards, c and d from the
// other one; a is opposite c.
struct FlipRecord {
  int flipped_edge = 0;
  std::array<int, 4> quad_sides{};
};

// Combinatorial ideal triangulation of a punctured orientable surface.
//
// Triangle sides are listed in boundary order. Corner j of a triangle sits
// between side j and side j+1, i.e. at the end of side j. Vertices (punctures)
// are numbered by their least incident corner index 3*t + j.
class Triangulation {
 public:
  // Validates and builds; throws Error on any invariant violation.
  static Triangulation build(int edge_count, std::vector<Triangle> triangles);

  int edge_count() const { return edge_count_; }
  int triangle_count() const { return static_cast<int>(triangles_.size()); }
  int vertex_count() const { return vertex_count_; }
  SurfaceSig signature() const { return sig_; }

  const std::vector<Triangle>& triangles() const { return triangles_; }
  const Triangle& triangle(int t) const { return triangles_[t]; }

  // The two slots holding `edge`: first the forward one, then the backward one.
  const std::array<Slot, 2>& slots(int edge) const { return slots_[edge]; }

  int corner_vertex(int triangle, int corner) const { return corner_vertex_[3 * triangle + corner]; }

  // Vertex at the tail (first) and head (second) of an edge.
  std::pair<int, int> endpoints(int edge) const { return endpoints_[edge]; }

  // Number of endpoints of `edge` at vertex `v` (0, 1 or 2).
  int endpoint_count(int edge, int v) const;

  // Labeled equality: same triangles up to cyclic rotation, ignoring the
  // bookkeeping direction of each edge.
  bool same_as(const Triangulation& other) const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) { return a.same_as(b); }

 private:
  Triangulation() = default;

  int edge_count_ = 0;
  int vertex_count_ = 0;
  SurfaceSig sig_;
  std::vector<Triangle> triangles_;
  std::vector<std::array<Slot, 2>> slots_;
  std::vector<int> corner_vertex_;
  std::vector<std::pair<int, int>> endpoints_;
};

using Frame = std::shared_ptr<const Triangulation>;

Frame make_frame(Triangulation tri);

// True when both frames describe the same labeled triangulation.
bool same_frame(const Frame& a, const Frame& b);

// Flattened labeled-equality class: equal keys iff same_as.
std::vector<int> canonical_key(const Triangulation& tri);

// False when the flip would need a self-folded triangle.
bool is_flippable(const Triangulation& tri, int edge);

std::pair<Triangulation, FlipRecord> flip(const Triangulation& tri, int edge);

// The flip record `flip` would produce, without building the result.
FlipRecord flip_record(const Triangulation& tri, int edge);

// Edge relabeling of `tri` (optionally with the orientation reversed): edge e
// becomes edge perm[e].
Triangulation relabel(const Triangulation& tri, const std::vector<int>& perm, bool reverse);

// Edge permutations `perm` with relabel(from, perm, reverse) == to.
// `fixed` lists edges that must map to themselves.
std::vector<std::vector<int>> find_isomorphisms(const Triangulation& from, const Triangulation& to,
                                                bool reverse, const std::vector<int>& fixed = {});

}  // namespace lamistrat
