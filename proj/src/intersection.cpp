// Geometric intersection number of two multicurves.
//
// Both families are drawn as straight normal arcs inside every triangle. On
// each edge the two families' points are merged into one sequence (family 0
// first, then family 1, in edge order). Crossings are counted per triangle.
// Innermost bigons are corridors: an adjacent (0,1) pair on an edge whose arcs
// cross on one side and then run parallel and adjacent through a chain of
// triangles until they cross again. Swapping the pair on every corridor edge
// removes exactly those two crossings. With no bigon left the count is
// minimal.

#include <algorithm>
#include <set>

#include "lamistrat/error.hpp"
#include "lamistrat/multicurve.hpp"
#include "normal_arcs.hpp"

namespace lamistrat {

namespace {

using detail::Counts;

class Arrangement {
 public:
  Arrangement(const Triangulation& tri, std::span<const std::int64_t> w0, std::span<const std::int64_t> w1)
      : tri_(tri), E_(tri.edge_count()) {
    w_[0].assign(w0.begin(), w0.end());
    w_[1].assign(w1.begin(), w1.end());
    tag_.resize(E_);
    at_.resize(E_);
    pos_[0].resize(E_);
    pos_[1].resize(E_);
    for (int e = 0; e < E_; ++e) {
      const std::int64_t n = w0[e] + w1[e];
      tag_[e].resize(n);
      at_[e].resize(n);
      for (int f = 0; f < 2; ++f) pos_[f][e].resize(w_[f][e]);
      std::int64_t q = 0;
      for (int f = 0; f < 2; ++f) {
        for (std::int64_t k = 0; k < w_[f][e]; ++k, ++q) {
          tag_[e][q] = static_cast<std::uint8_t>(f);
          at_[e][q] = k;
          pos_[f][e][k] = q;
        }
      }
    }
    for (int t = 0; t < tri.triangle_count(); ++t) {
      for (int f = 0; f < 2; ++f) {
        sw_[f].push_back(detail::side_weights(tri.triangle(t), w_[f]));
        cc_[f].push_back(detail::corner_counts(sw_[f].back()));
      }
    }
  }

  std::int64_t crossings() const {
    std::int64_t total = 0;
    for (int t = 0; t < tri_.triangle_count(); ++t) {
      auto a = chords(t, 0);
      auto b = chords(t, 1);
      for (const auto& x : a)
        for (const auto& y : b) total += cross(x, y) ? 1 : 0;
    }
    return total;
  }

  // Removes one innermost bigon per successful corridor walk; returns the
  // number removed in this pass.
  int reduce_pass() {
    int removed = 0;
    for (int e = 0; e < E_; ++e) {
      for (std::int64_t q = 0; q + 1 < static_cast<std::int64_t>(tag_[e].size()); ++q) {
        if (tag_[e][q] == tag_[e][q + 1]) continue;
        const auto& slots = tri_.slots(e);
        for (int s = 0; s < 2; ++s) {
          if (!pair_crosses(slots[s], e, q)) continue;
          std::vector<std::pair<int, std::int64_t>> path;
          if (walk(slots[1 - s], e, q, path)) {
            for (auto [pe, pq] : path) swap_adjacent(pe, pq);
            ++removed;
            break;
          }
        }
      }
    }
    return removed;
  }

 private:
  struct Chord {
    std::int64_t u, v;
  };

  struct ArcEnd {
    int side;              // side of the partner endpoint
    std::int64_t merged;   // partner's position in edge order on its edge
    Chord chord;           // circle coordinates of the whole arc
  };

  static bool cross(const Chord& x, const Chord& y) {
    const std::int64_t lo = std::min(x.u, x.v), hi = std::max(x.u, x.v);
    const bool a = lo < y.u && y.u < hi;
    const bool b = lo < y.v && y.v < hi;
    return a != b;
  }

  std::int64_t merged_size(int e) const { return static_cast<std::int64_t>(tag_[e].size()); }

  std::int64_t circle_offset(int t, int side) const {
    const auto& tr = tri_.triangle(t);
    std::int64_t off = 0;
    for (int j = 0; j < side; ++j) off += merged_size(tr[j].edge);
    return off;
  }

  // Circle coordinate of a family-f point at family traversal index k on `side`.
  std::int64_t coordinate(int t, int side, int f, std::int64_t k) const {
    const SignedEdge& s = tri_.triangle(t)[side];
    const std::int64_t ke = detail::to_edge_order(s, w_[f][s.edge], k);
    const std::int64_t q = pos_[f][s.edge][ke];
    const std::int64_t qt = detail::to_edge_order(s, merged_size(s.edge), q);
    return circle_offset(t, side) + qt;
  }

  std::vector<Chord> chords(int t, int f) const {
    std::vector<Chord> out;
    const Counts& w = sw_[f][t];
    const Counts& c = cc_[f][t];
    for (int j = 0; j < 3; ++j) {
      const int next = (j + 1) % 3;
      for (std::int64_t k = 0; k < c[j]; ++k) {
        out.push_back({coordinate(t, j, f, w[j] - 1 - k), coordinate(t, next, f, k)});
      }
    }
    return out;
  }

  // Arc through merged point q of edge e, seen from triangle slot `slot`.
  ArcEnd arc_at(const Slot& slot, int e, std::int64_t q) const {
    const int t = slot.triangle;
    const SignedEdge& s = tri_.triangle(t)[slot.side];
    const int f = tag_[e][q];
    const std::int64_t k = detail::to_edge_order(s, w_[f][e], at_[e][q]);
    const auto p = detail::arc_partner(sw_[f][t], cc_[f][t], slot.side, k);
    const SignedEdge& ps = tri_.triangle(t)[p.side];
    const std::int64_t pke = detail::to_edge_order(ps, w_[f][ps.edge], p.pos);
    ArcEnd out;
    out.side = p.side;
    out.merged = pos_[f][ps.edge][pke];
    out.chord = {coordinate(t, slot.side, f, k), coordinate(t, p.side, f, p.pos)};
    return out;
  }

  bool pair_crosses(const Slot& slot, int e, std::int64_t q) const {
    return cross(arc_at(slot, e, q).chord, arc_at(slot, e, q + 1).chord);
  }

  bool walk(Slot slot, int e, std::int64_t q, std::vector<std::pair<int, std::int64_t>>& path) const {
    std::set<std::pair<int, std::int64_t>> seen{{e, q}, {e, q + 1}};
    path.assign(1, {e, q});
    for (;;) {
      ArcEnd a = arc_at(slot, e, q);
      ArcEnd b = arc_at(slot, e, q + 1);
      if (cross(a.chord, b.chord)) return true;
      if (a.side != b.side) return false;
      if (std::max(a.merged, b.merged) - std::min(a.merged, b.merged) != 1) return false;
      const int e2 = tri_.triangle(slot.triangle)[a.side].edge;
      const std::int64_t q2 = std::min(a.merged, b.merged);
      if (!seen.insert({e2, q2}).second || !seen.insert({e2, q2 + 1}).second) return false;
      path.push_back({e2, q2});
      const auto& s2 = tri_.slots(e2);
      slot = (s2[0].triangle == slot.triangle && s2[0].side == a.side) ? s2[1] : s2[0];
      e = e2;
      q = q2;
    }
  }

  void swap_adjacent(int e, std::int64_t q) {
    std::swap(tag_[e][q], tag_[e][q + 1]);
    std::swap(at_[e][q], at_[e][q + 1]);
    pos_[tag_[e][q]][e][at_[e][q]] = q;
    pos_[tag_[e][q + 1]][e][at_[e][q + 1]] = q + 1;
  }

  const Triangulation& tri_;
  int E_;
  std::vector<std::int64_t> w_[2];
  std::vector<std::vector<std::uint8_t>> tag_;
  std::vector<std::vector<std::int64_t>> at_;
  std::vector<std::vector<std::int64_t>> pos_[2];
  std::vector<Counts> sw_[2], cc_[2];
};

}  // namespace

Weight intersection_number(const Multicurve& a, const Multicurve& b) {
  if (!same_frame(a.frame(), b.frame())) throw Error(ErrorKind::FrameMismatch, "curves live in different frames");
  auto wa = to_machine(a.weights());
  auto wb = to_machine(b.weights());
  Arrangement arr(a.coords().triangulation(), wa, wb);
  while (arr.reduce_pass() > 0) {
  }
  return Weight(arr.crossings());
}

}  // namespace lamistrat
