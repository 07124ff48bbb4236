#include "lamistrat/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "lamistrat/error.hpp"

namespace lamistrat {

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<int> parent;
};

// Endpoint labels: 2e is the tail of edge e, 2e+1 its head.
int side_start(const SignedEdge& s) { return 2 * s.edge + (s.forward ? 0 : 1); }
int side_end(const SignedEdge& s) { return 2 * s.edge + (s.forward ? 1 : 0); }

using Canonical = std::vector<std::array<int, 3>>;

Canonical canonical_form(const std::vector<Triangle>& triangles) {
  Canonical out;
  out.reserve(triangles.size());
  for (const auto& tri : triangles) {
    std::array<int, 3> e{tri[0].edge, tri[1].edge, tri[2].edge};
    auto lowest = std::min_element(e.begin(), e.end()) - e.begin();
    std::rotate(e.begin(), e.begin() + lowest, e.end());
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Triangulation Triangulation::build(int edge_count, std::vector<Triangle> triangles) {
  if (edge_count <= 0) throw Error(ErrorKind::InvalidInput, "edge count must be positive");
  const int F = static_cast<int>(triangles.size());

  std::vector<std::vector<Slot>> uses(edge_count);
  for (int t = 0; t < F; ++t) {
    for (int j = 0; j < 3; ++j) {
      int e = triangles[t][j].edge;
      if (e < 0 || e >= edge_count) {
        throw Error(ErrorKind::InvalidInput, "edge index " + std::to_string(e) + " out of range");
      }
      uses[e].push_back({t, j});
    }
  }
  for (int e = 0; e < edge_count; ++e) {
    if (uses[e].size() != 2) {
      throw Error(ErrorKind::EdgeDegree, "edge " + std::to_string(e) + " is used " +
                                             std::to_string(uses[e].size()) + " times");
    }
  }
  for (int t = 0; t < F; ++t) {
    const auto& tri = triangles[t];
    if (tri[0].edge == tri[1].edge || tri[1].edge == tri[2].edge || tri[0].edge == tri[2].edge) {
      throw Error(ErrorKind::SelfFolded, "triangle " + std::to_string(t) + " repeats an edge");
    }
  }

  Triangulation out;
  out.edge_count_ = edge_count;
  out.slots_.resize(edge_count);
  for (int e = 0; e < edge_count; ++e) {
    Slot s0 = uses[e][0], s1 = uses[e][1];
    bool f0 = triangles[s0.triangle][s0.side].forward;
    bool f1 = triangles[s1.triangle][s1.side].forward;
    if (f0 == f1) {
      throw Error(ErrorKind::OrientationMismatch,
                  "edge " + std::to_string(e) + " is traversed in the same direction twice");
    }
    out.slots_[e] = f0 ? std::array<Slot, 2>{s0, s1} : std::array<Slot, 2>{s1, s0};
  }

  // Dual graph connectivity.
  {
    DisjointSets dual(F);
    for (int e = 0; e < edge_count; ++e) dual.unite(out.slots_[e][0].triangle, out.slots_[e][1].triangle);
    for (int t = 0; t < F; ++t) {
      if (dual.find(t) != 0) throw Error(ErrorKind::Disconnected, "dual gluing graph is disconnected");
    }
  }

  // Corners glue the end of one side to the start of the next.
  DisjointSets ends(2 * edge_count);
  for (const auto& tri : triangles) {
    for (int j = 0; j < 3; ++j) ends.unite(side_end(tri[j]), side_start(tri[(j + 1) % 3]));
  }
  std::vector<int> label(2 * edge_count, -1);
  out.corner_vertex_.assign(3 * F, -1);
  int V = 0;
  for (int t = 0; t < F; ++t) {
    for (int j = 0; j < 3; ++j) {
      int root = ends.find(side_end(triangles[t][j]));
      if (label[root] < 0) label[root] = V++;
      out.corner_vertex_[3 * t + j] = label[root];
    }
  }
  out.vertex_count_ = V;
  out.endpoints_.resize(edge_count);
  for (int e = 0; e < edge_count; ++e) {
    out.endpoints_[e] = {label[ends.find(2 * e)], label[ends.find(2 * e + 1)]};
  }

  // V - E + F = 2 - 2g with n = V punctures.
  int twice_genus = 2 - V + edge_count - F;
  if (twice_genus < 0 || twice_genus % 2 != 0 || 3 * F != 2 * edge_count) {
    throw Error(ErrorKind::BadEuler, "Euler count matches no orientable punctured surface");
  }
  out.sig_ = {twice_genus / 2, V};
  if (out.sig_.complexity() < 1) {
    throw Error(ErrorKind::BadEuler, "surface carries no essential simple closed curve");
  }
  out.triangles_ = std::move(triangles);
  return out;
}

int Triangulation::endpoint_count(int edge, int v) const {
  return (endpoints_[edge].first == v ? 1 : 0) + (endpoints_[edge].second == v ? 1 : 0);
}

bool Triangulation::same_as(const Triangulation& other) const {
  if (this == &other) return true;
  return edge_count_ == other.edge_count_ && canonical_form(triangles_) == canonical_form(other.triangles_);
}

std::vector<int> canonical_key(const Triangulation& tri) {
  std::vector<int> key{tri.edge_count()};
  for (const auto& t : canonical_form(tri.triangles())) key.insert(key.end(), t.begin(), t.end());
  return key;
}

Frame make_frame(Triangulation tri) { return std::make_shared<const Triangulation>(std::move(tri)); }

bool same_frame(const Frame& a, const Frame& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

namespace {

struct QuadView {
  Slot plus, minus;
  SignedEdge a, b, c, d;
};

QuadView quad_view(const Triangulation& tri, int edge) {
  if (edge < 0 || edge >= tri.edge_count()) {
    throw Error(ErrorKind::InvalidInput, "edge " + std::to_string(edge) + " out of range");
  }
  const auto& s = tri.slots(edge);
  if (s[0].triangle == s[1].triangle) {
    throw Error(ErrorKind::NotFlippable, "edge " + std::to_string(edge) + " is self-adjacent");
  }
  const Triangle& p = tri.triangle(s[0].triangle);
  const Triangle& m = tri.triangle(s[1].triangle);
  return {s[0], s[1], p[(s[0].side + 1) % 3], p[(s[0].side + 2) % 3], m[(s[1].side + 1) % 3],
          m[(s[1].side + 2) % 3]};
}

}  // namespace

FlipRecord flip_record(const Triangulation& tri, int edge) {
  QuadView q = quad_view(tri, edge);
  return {edge, {q.a.edge, q.b.edge, q.c.edge, q.d.edge}};
}

bool is_flippable(const Triangulation& tri, int edge) {
  if (edge < 0 || edge >= tri.edge_count()) return false;
  const auto& s = tri.slots(edge);
  if (s[0].triangle == s[1].triangle) return false;
  QuadView q = quad_view(tri, edge);
  return q.a.edge != q.d.edge && q.b.edge != q.c.edge;
}

std::pair<Triangulation, FlipRecord> flip(const Triangulation& tri, int edge) {
  QuadView q = quad_view(tri, edge);
  // The new diagonal runs from the a/b corner to the c/d corner.
  if (q.a.edge == q.d.edge || q.b.edge == q.c.edge) {
    throw Error(ErrorKind::NotFlippable,
                "flipping edge " + std::to_string(edge) + " would create a self-folded triangle");
  }
  std::vector<Triangle> tris = tri.triangles();
  tris[q.plus.triangle] = {SignedEdge{edge, true}, q.d, q.a};
  tris[q.minus.triangle] = {SignedEdge{edge, false}, q.b, q.c};
  FlipRecord rec{edge, {q.a.edge, q.b.edge, q.c.edge, q.d.edge}};
  return {Triangulation::build(tri.edge_count(), std::move(tris)), rec};
}

namespace {

bool is_permutation_of_range(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) return false;
    seen[p] = 1;
  }
  return true;
}

std::vector<Triangle> relabeled_triangles(const Triangulation& tri, const std::vector<int>& perm,
                                          bool reverse) {
  std::vector<Triangle> tris;
  tris.reserve(tri.triangle_count());
  for (const auto& t : tri.triangles()) {
    Triangle r;
    for (int j = 0; j < 3; ++j) r[j] = {perm[t[j].edge], t[j].forward};
    if (reverse) {
      r = {SignedEdge{r[2].edge, !r[2].forward}, SignedEdge{r[1].edge, !r[1].forward},
           SignedEdge{r[0].edge, !r[0].forward}};
    }
    tris.push_back(r);
  }
  return tris;
}

}  // namespace

Triangulation relabel(const Triangulation& tri, const std::vector<int>& perm, bool reverse) {
  if (!is_permutation_of_range(perm, tri.edge_count())) {
    throw Error(ErrorKind::NotBijective, "relabeling is not a permutation of the edges");
  }
  return Triangulation::build(tri.edge_count(), relabeled_triangles(tri, perm, reverse));
}

std::vector<std::vector<int>> find_isomorphisms(const Triangulation& from, const Triangulation& to,
                                                bool reverse, const std::vector<int>& fixed) {
  std::vector<std::vector<int>> found;
  if (from.edge_count() != to.edge_count() || from.triangle_count() != to.triangle_count()) return found;
  const int E = from.edge_count();
  const int F = from.triangle_count();
  std::vector<int> identity(E);
  std::iota(identity.begin(), identity.end(), 0);
  const std::vector<Triangle> src = relabeled_triangles(from, identity, reverse);

  // Slot lookup for the (possibly reversed) source.
  std::vector<std::array<Slot, 2>> src_slots(E);
  {
    std::vector<int> count(E, 0);
    for (int t = 0; t < F; ++t)
      for (int j = 0; j < 3; ++j) src_slots[src[t][j].edge][count[src[t][j].edge]++] = {t, j};
  }
  auto other_slot = [](const std::array<Slot, 2>& s, int t, int j) {
    return (s[0].triangle == t && s[0].side == j) ? s[1] : s[0];
  };

  std::set<std::vector<int>> unique;
  for (int u0 = 0; u0 < F; ++u0) {
    for (int r0 = 0; r0 < 3; ++r0) {
      std::vector<int> perm(E, -1);
      std::vector<int> img_tri(F, -1), img_rot(F, -1);
      std::queue<int> work;
      img_tri[0] = u0;
      img_rot[0] = r0;
      work.push(0);
      bool ok = true;
      std::vector<char> used_tri(F, 0);
      used_tri[u0] = 1;
      while (ok && !work.empty()) {
        int t = work.front();
        work.pop();
        int u = img_tri[t], rot = img_rot[t];
        for (int i = 0; i < 3 && ok; ++i) {
          int e = src[t][i].edge;
          int j = (i + rot) % 3;
          int f = to.triangle(u)[j].edge;
          if (perm[e] >= 0 && perm[e] != f) {
            ok = false;
            break;
          }
          perm[e] = f;
          Slot ns = other_slot(src_slots[e], t, i);
          const auto& ts = to.slots(f);
          Slot nt = (ts[0].triangle == u && ts[0].side == j) ? ts[1] : ts[0];
          int nrot = ((nt.side - ns.side) % 3 + 3) % 3;
          if (img_tri[ns.triangle] < 0) {
            if (used_tri[nt.triangle]) {
              ok = false;
              break;
            }
            used_tri[nt.triangle] = 1;
            img_tri[ns.triangle] = nt.triangle;
            img_rot[ns.triangle] = nrot;
            work.push(ns.triangle);
          } else if (img_tri[ns.triangle] != nt.triangle || img_rot[ns.triangle] != nrot) {
            ok = false;
          }
        }
      }
      if (!ok || !is_permutation_of_range(perm, E)) continue;
      bool respects_fixed = std::all_of(fixed.begin(), fixed.end(), [&](int e) { return perm[e] == e; });
      if (!respects_fixed) continue;
      if (!to.same_as(Triangulation::build(E, relabeled_triangles(from, perm, reverse)))) continue;
      if (unique.insert(perm).second) found.push_back(perm);
    }
  }
  return found;
}

}  // namespace lamistrat
