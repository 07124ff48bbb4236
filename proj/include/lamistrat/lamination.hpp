#pragma once

#include <vector>

#include "lamistrat/multicurve.hpp"

namespace lamistrat {

struct WeightedCurve {
  Multicurve curve;  // connected
  Rational weight;   // positive

  friend bool operator==(const WeightedCurve&, const WeightedCurve&) = default;
};

// A rational point of measured lamination space: a positively weighted family
// of pairwise disjoint, pairwise non-isotopic curves, sorted by weight vector.
class RationalLamination {
 public:
  // Throws NotConnected, NonDisjointComponents, InvalidInput (weight <= 0 or
  // duplicate component), FrameMismatch.
  RationalLamination(Frame frame, std::vector<WeightedCurve> components);

  static RationalLamination empty(Frame frame) { return RationalLamination(std::move(frame), {}); }

  // Integer multicurve read as a lamination: multiplicities become weights.
  static RationalLamination from_multicurve(const Multicurve& m);

  const Frame& frame() const { return frame_; }
  const std::vector<WeightedCurve>& components() const { return components_; }
  bool empty() const { return components_.empty(); }

  // Sum of weight * coordinates; integral only when all weights are.
  std::vector<Rational> coordinates() const;

  friend bool operator==(const RationalLamination& a, const RationalLamination& b) {
    return same_frame(a.frame_, b.frame_) && a.components_ == b.components_;
  }

 private:
  Frame frame_;
  std::vector<WeightedCurve> components_;
};

// Union of two laminations with disjoint supports; coinciding curves add
// their weights. Throws NonDisjointComponents.
RationalLamination lam_sum(const RationalLamination& a, const RationalLamination& b);

RationalLamination lam_scale(const RationalLamination& a, const Rational& factor);

// Bilinear extension of the curve intersection number.
Rational lam_intersection(const RationalLamination& a, const RationalLamination& b);

}  // namespace lamistrat
