#include "lamistrat/cut.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lamistrat/error.hpp"
#include "normal_arcs.hpp"

namespace lamistrat {

// Each triangle is split by the arcs into pieces: a central piece plus, for
// corner j, levels 0..c_j-1 (level 0 touches the corner, level L lies between
// arcs L-1 and L). Pieces glue across the open edge segments between points.
CutInvariants cut_invariants(const Multicurve& c) {
  if (c.empty() || !is_connected(c)) throw Error(ErrorKind::NotConnected, "cut needs a single connected curve");
  const Triangulation& tri = c.coords().triangulation();
  const auto w = to_machine(c.weights());
  const int F = tri.triangle_count();

  std::vector<detail::Counts> sw(F), cc(F);
  std::vector<std::int64_t> base(F + 1, 0);
  for (int t = 0; t < F; ++t) {
    sw[t] = detail::side_weights(tri.triangle(t), w);
    cc[t] = detail::corner_counts(sw[t]);
    base[t + 1] = base[t] + 1 + cc[t][0] + cc[t][1] + cc[t][2];
  }
  auto corner_piece = [&](int t, int corner, std::int64_t level) {
    std::int64_t off = 1;
    for (int j = 0; j < corner; ++j) off += cc[t][j];
    return base[t] + off + level;
  };
  auto central = [&](int t) { return base[t]; };
  // Piece next to traversal segment s (0..w) of `side`.
  auto segment_piece = [&](int t, int side, std::int64_t s) {
    const int prev = (side + 2) % 3;
    if (s < cc[t][prev]) return corner_piece(t, prev, s);
    if (s == cc[t][prev]) return central(t);
    return corner_piece(t, side, sw[t][side] - s);
  };

  const std::int64_t P = base[F];
  std::vector<std::int64_t> parent(P);
  std::iota(parent.begin(), parent.end(), std::int64_t{0});
  auto find = [&](std::int64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<std::pair<std::int64_t, std::int64_t>> glued;
  for (int e = 0; e < tri.edge_count(); ++e) {
    const auto& sl = tri.slots(e);
    const SignedEdge& s0 = tri.triangle(sl[0].triangle)[sl[0].side];
    const SignedEdge& s1 = tri.triangle(sl[1].triangle)[sl[1].side];
    for (std::int64_t seg = 0; seg <= w[e]; ++seg) {
      std::int64_t t0 = s0.forward ? seg : w[e] - seg;
      std::int64_t t1 = s1.forward ? seg : w[e] - seg;
      std::int64_t a = segment_piece(sl[0].triangle, sl[0].side, t0);
      std::int64_t b = segment_piece(sl[1].triangle, sl[1].side, t1);
      glued.push_back({a, b});
      a = find(a);
      b = find(b);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::map<std::int64_t, int> region_of_root;
  for (std::int64_t p = 0; p < P; ++p) region_of_root.try_emplace(find(p), static_cast<int>(region_of_root.size()));
  const int R = static_cast<int>(region_of_root.size());
  auto region = [&](std::int64_t piece) { return region_of_root.at(find(piece)); };

  std::vector<std::int64_t> euler(R, 0);
  for (std::int64_t p = 0; p < P; ++p) ++euler[region(p)];
  for (const auto& g : glued) --euler[region(g.first)];

  std::vector<std::set<int>> punct(R);
  for (int t = 0; t < F; ++t) {
    for (int j = 0; j < 3; ++j) {
      std::int64_t piece = cc[t][j] > 0 ? corner_piece(t, j, 0) : central(t);
      punct[region(piece)].insert(tri.corner_vertex(t, j));
    }
  }

  std::vector<int> boundary(R, 0);
  for (int t = 0; t < F; ++t) {
    int j = 0;
    while (j < 3 && cc[t][j] == 0) ++j;
    if (j == 3) continue;
    std::int64_t inner = corner_piece(t, j, 0);
    std::int64_t outer = cc[t][j] > 1 ? corner_piece(t, j, 1) : central(t);
    ++boundary[region(inner)];
    ++boundary[region(outer)];
    break;
  }

  CutInvariants out;
  out.separating = R == 2;
  for (int r = 0; r < R; ++r) {
    const int p = static_cast<int>(punct[r].size());
    const std::int64_t twice_genus = 2 - boundary[r] - p - euler[r];
    if (twice_genus < 0 || twice_genus % 2 != 0) {
      throw Error(ErrorKind::InvalidInput, "inconsistent region Euler count");
    }
    out.regions.push_back({static_cast<int>(twice_genus / 2), p, boundary[r]});
  }
  std::sort(out.regions.begin(), out.regions.end(), std::greater<>());
  return out;
}

bool is_separating(const Multicurve& c) { return cut_invariants(c).separating; }

}  // namespace lamistrat
