#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lamistrat/triangulation.hpp"
#include "lamistrat/weights.hpp"

namespace lamistrat {

// Edge weights of a normal multicurve: per triangle the sum is even and each
// weight is at most the sum of the other two. May contain vertex links.
class NormalCoords {
 public:
  // Throws ParityViolation / TriangleInequalityViolation / InvalidInput.
  NormalCoords(Frame frame, WeightVector weights);

  const Frame& frame() const { return frame_; }
  const Triangulation& triangulation() const { return *frame_; }
  const WeightVector& weights() const { return weights_; }
  bool empty() const;

  friend bool operator==(const NormalCoords& a, const NormalCoords& b) {
    return a.weights_ == b.weights_ && same_frame(a.frame_, b.frame_);
  }

 private:
  Frame frame_;
  WeightVector weights_;
};

// Essential multicurve: a NormalCoords with no vertex-linking component.
// The all-zero vector is the empty multicurve.
class Multicurve {
 public:
  const NormalCoords& coords() const { return coords_; }
  const Frame& frame() const { return coords_.frame(); }
  const WeightVector& weights() const { return coords_.weights(); }
  bool empty() const { return coords_.empty(); }

  friend bool operator==(const Multicurve& a, const Multicurve& b) { return a.coords_ == b.coords_; }

  // Lexicographic on weight vectors (frames are assumed equal).
  friend bool operator<(const Multicurve& a, const Multicurve& b) { return a.weights() < b.weights(); }

 private:
  explicit Multicurve(NormalCoords coords) : coords_(std::move(coords)) {}

  friend Multicurve validate(const NormalCoords& coords);
  friend Multicurve unchecked_multicurve(NormalCoords coords);

  NormalCoords coords_;
};

struct Component {
  Multicurve curve;
  std::int64_t multiplicity = 1;

  friend bool operator==(const Component& a, const Component& b) {
    return a.multiplicity == b.multiplicity && a.curve == b.curve;
  }
};

struct StripResult {
  Multicurve curve;
  std::vector<int> stripped;  // puncture ids, one entry per removed link
};

// Throws PeripheralComponent if some component is a vertex link.
Multicurve validate(Frame frame, WeightVector weights);
Multicurve validate(const NormalCoords& coords);

// For internal use on values already known to be essential.
Multicurve unchecked_multicurve(NormalCoords coords);

// Connected components with multiplicities, sorted by weight vector.
std::vector<Component> decompose(const Multicurve& m);

// Same, for any normal coordinates; `peripheral[i]` is the puncture a
// component links, or -1.
struct RawComponent {
  WeightVector weights;
  std::int64_t multiplicity = 1;
  int peripheral = -1;
};
std::vector<RawComponent> decompose_raw(const NormalCoords& coords);

bool is_connected(const Multicurve& m);

StripResult strip_peripheral(Frame frame, WeightVector weights);

// Weight vector of the curve encircling puncture v.
WeightVector vertex_link(const Triangulation& tri, int v);

// Max-plus flip rule on a raw weight vector.
WeightVector flip_weights(std::span<const Weight> weights, const FlipRecord& rec);

// Throws FrameMismatch unless `rec` describes a flip of m's triangulation and
// `target` is the flipped triangulation.
NormalCoords transport_flip(const NormalCoords& m, const FlipRecord& rec, const Frame& target);

// Convenience: flips `edge` of m's triangulation and transports m.
NormalCoords transport_flip(const NormalCoords& m, int edge);

// Exact geometric intersection number.
Weight intersection_number(const Multicurve& a, const Multicurve& b);

// Sum-and-decompose disjointness test.
bool is_disjoint(const Multicurve& a, const Multicurve& b);

}  // namespace lamistrat
