#include "lamistrat/multicurve.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lamistrat/error.hpp"
#include "normal_arcs.hpp"

namespace lamistrat {

namespace detail {

Trace trace_components(const Triangulation& tri, std::span<const std::int64_t> w) {
  const int E = tri.edge_count();
  Trace out;
  out.offset.assign(E + 1, 0);
  for (int e = 0; e < E; ++e) out.offset[e + 1] = out.offset[e] + w[e];
  const std::int64_t points = out.offset[E];

  std::vector<std::int64_t> parent(points);
  std::iota(parent.begin(), parent.end(), std::int64_t{0});
  auto find = [&](std::int64_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (const auto& t : tri.triangles()) {
    Counts sw = side_weights(t, w);
    Counts c = corner_counts(sw);
    for (int j = 0; j < 3; ++j) {
      // Arcs at corner j: k-th from the corner joins side j and side j+1.
      const int next = (j + 1) % 3;
      for (std::int64_t k = 0; k < c[j]; ++k) {
        std::int64_t p = out.offset[t[j].edge] + to_edge_order(t[j], sw[j], sw[j] - 1 - k);
        std::int64_t q = out.offset[t[next].edge] + to_edge_order(t[next], sw[next], k);
        std::int64_t a = find(p), b = find(q);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  out.component.assign(points, -1);
  std::vector<std::int32_t> root_index(points, -1);
  for (int e = 0; e < E; ++e) {
    for (std::int64_t p = out.offset[e]; p < out.offset[e + 1]; ++p) {
      std::int64_t r = find(p);
      if (root_index[r] < 0) {
        root_index[r] = static_cast<std::int32_t>(out.weights.size());
        out.weights.emplace_back(E, 0);
      }
      out.component[p] = root_index[r];
      ++out.weights[root_index[r]][e];
    }
  }
  return out;
}

}  // namespace detail

namespace {

void check_triangle_conditions(const Triangulation& tri, std::span<const Weight> w) {
  for (int t = 0; t < tri.triangle_count(); ++t) {
    const auto& tr = tri.triangle(t);
    const Weight& x = w[tr[0].edge];
    const Weight& y = w[tr[1].edge];
    const Weight& z = w[tr[2].edge];
    if ((x + y + z) % 2 != 0) {
      throw Error(ErrorKind::ParityViolation, "odd weight sum in triangle " + std::to_string(t));
    }
  }
  for (int t = 0; t < tri.triangle_count(); ++t) {
    const auto& tr = tri.triangle(t);
    const Weight& x = w[tr[0].edge];
    const Weight& y = w[tr[1].edge];
    const Weight& z = w[tr[2].edge];
    if (x > y + z || y > z + x || z > x + y) {
      throw Error(ErrorKind::TriangleInequalityViolation,
                  "triangle inequality fails in triangle " + std::to_string(t));
    }
  }
}

WeightVector to_weight_vector(const std::vector<std::int64_t>& w) { return WeightVector(w.begin(), w.end()); }

std::vector<WeightVector> all_links(const Triangulation& tri) {
  std::vector<WeightVector> links;
  for (int v = 0; v < tri.vertex_count(); ++v) links.push_back(vertex_link(tri, v));
  return links;
}

}  // namespace

NormalCoords::NormalCoords(Frame frame, WeightVector weights)
    : frame_(std::move(frame)), weights_(std::move(weights)) {
  if (!frame_) throw Error(ErrorKind::InvalidInput, "missing triangulation");
  if (static_cast<int>(weights_.size()) != frame_->edge_count()) {
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(frame_->edge_count()) +
                                             " weights, got " + std::to_string(weights_.size()));
  }
  for (const auto& w : weights_) {
    if (w < 0) throw Error(ErrorKind::InvalidInput, "weights must be nonnegative");
  }
  check_triangle_conditions(*frame_, weights_);
}

bool NormalCoords::empty() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Weight& w) { return w == 0; });
}

WeightVector vertex_link(const Triangulation& tri, int v) {
  WeightVector out(tri.edge_count(), 0);
  for (int e = 0; e < tri.edge_count(); ++e) out[e] = tri.endpoint_count(e, v);
  return out;
}

std::vector<RawComponent> decompose_raw(const NormalCoords& coords) {
  const auto& tri = coords.triangulation();
  auto w = to_machine(coords.weights());
  detail::Trace tr = detail::trace_components(tri, w);
  std::map<std::vector<std::int64_t>, std::int64_t> grouped;
  for (auto& cw : tr.weights) ++grouped[cw];

  auto links = all_links(tri);
  std::vector<RawComponent> out;
  for (auto& [cw, mult] : grouped) {
    RawComponent rc{to_weight_vector(cw), mult, -1};
    for (int v = 0; v < static_cast<int>(links.size()); ++v) {
      if (links[v] == rc.weights) {
        rc.peripheral = v;
        break;
      }
    }
    out.push_back(std::move(rc));
  }
  std::sort(out.begin(), out.end(),
            [](const RawComponent& a, const RawComponent& b) { return a.weights < b.weights; });
  return out;
}

Multicurve validate(const NormalCoords& coords) {
  for (const auto& rc : decompose_raw(coords)) {
    if (rc.peripheral >= 0) {
      throw Error(ErrorKind::PeripheralComponent,
                  "component links puncture v" + std::to_string(rc.peripheral));
    }
  }
  return Multicurve(coords);
}

Multicurve validate(Frame frame, WeightVector weights) {
  return validate(NormalCoords(std::move(frame), std::move(weights)));
}

Multicurve unchecked_multicurve(NormalCoords coords) { return Multicurve(std::move(coords)); }

std::vector<Component> decompose(const Multicurve& m) {
  std::vector<Component> out;
  for (auto& rc : decompose_raw(m.coords())) {
    out.push_back({unchecked_multicurve(NormalCoords(m.frame(), std::move(rc.weights))), rc.multiplicity});
  }
  return out;
}

bool is_connected(const Multicurve& m) {
  auto parts = decompose(m);
  return parts.size() == 1 && parts[0].multiplicity == 1;
}

StripResult strip_peripheral(Frame frame, WeightVector weights) {
  NormalCoords coords(frame, std::move(weights));
  WeightVector rest(frame->edge_count(), 0);
  std::vector<int> stripped;
  for (const auto& rc : decompose_raw(coords)) {
    if (rc.peripheral >= 0) {
      for (std::int64_t i = 0; i < rc.multiplicity; ++i) stripped.push_back(rc.peripheral);
      continue;
    }
    for (std::size_t e = 0; e < rest.size(); ++e) rest[e] += rc.weights[e] * rc.multiplicity;
  }
  std::sort(stripped.begin(), stripped.end());
  return {unchecked_multicurve(NormalCoords(frame, std::move(rest))), stripped};
}

WeightVector flip_weights(std::span<const Weight> w, const FlipRecord& rec) {
  const auto& q = rec.quad_sides;
  WeightVector out(w.begin(), w.end());
  Weight ac = w[q[0]] + w[q[2]];
  Weight bd = w[q[1]] + w[q[3]];
  out[rec.flipped_edge] = (ac > bd ? ac : bd) - w[rec.flipped_edge];
  return out;
}

NormalCoords transport_flip(const NormalCoords& m, const FlipRecord& rec, const Frame& target) {
  const auto& tri = m.triangulation();
  if (rec.flipped_edge < 0 || rec.flipped_edge >= tri.edge_count()) {
    throw Error(ErrorKind::FrameMismatch, "flip record does not belong to this triangulation");
  }
  FlipRecord expected = flip_record(tri, rec.flipped_edge);
  if (expected.quad_sides != rec.quad_sides) {
    throw Error(ErrorKind::FrameMismatch, "flip record does not match the source triangulation");
  }
  if (!target || !target->same_as(flip(tri, rec.flipped_edge).first)) {
    throw Error(ErrorKind::FrameMismatch, "target is not the flipped triangulation");
  }
  return NormalCoords(target, flip_weights(m.weights(), rec));
}

NormalCoords transport_flip(const NormalCoords& m, int edge) {
  auto [next, rec] = flip(m.triangulation(), edge);
  return NormalCoords(make_frame(std::move(next)), flip_weights(m.weights(), rec));
}

bool is_disjoint(const Multicurve& a, const Multicurve& b) {
  if (!same_frame(a.frame(), b.frame())) throw Error(ErrorKind::FrameMismatch, "curves live in different frames");
  std::map<WeightVector, std::int64_t> expected;
  for (const auto& c : decompose(a)) expected[c.curve.weights()] += c.multiplicity;
  for (const auto& c : decompose(b)) expected[c.curve.weights()] += c.multiplicity;

  NormalCoords sum(a.frame(), add(a.weights(), b.weights()));
  std::map<WeightVector, std::int64_t> actual;
  for (const auto& rc : decompose_raw(sum)) {
    if (rc.peripheral >= 0) return false;
    actual[rc.weights] += rc.multiplicity;
  }
  return actual == expected;
}

}  // namespace lamistrat
