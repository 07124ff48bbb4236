#include "lamistrat/lamination.hpp"

#include <algorithm>

#include "lamistrat/error.hpp"

namespace lamistrat {

RationalLamination::RationalLamination(Frame frame, std::vector<WeightedCurve> components)
    : frame_(std::move(frame)), components_(std::move(components)) {
  if (!frame_) throw Error(ErrorKind::InvalidInput, "missing triangulation");
  for (const auto& wc : components_) {
    if (!same_frame(wc.curve.frame(), frame_)) throw Error(ErrorKind::FrameMismatch, "component in another frame");
    if (wc.weight <= 0) throw Error(ErrorKind::InvalidInput, "lamination weights must be positive");
    if (wc.curve.empty() || !is_connected(wc.curve)) {
      throw Error(ErrorKind::NotConnected, "lamination components must be connected curves");
    }
  }
  std::sort(components_.begin(), components_.end(),
            [](const WeightedCurve& a, const WeightedCurve& b) { return a.curve < b.curve; });
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (std::size_t j = i + 1; j < components_.size(); ++j) {
      if (components_[i].curve == components_[j].curve) {
        throw Error(ErrorKind::InvalidInput, "duplicate lamination component");
      }
      if (!is_disjoint(components_[i].curve, components_[j].curve)) {
        throw Error(ErrorKind::NonDisjointComponents, "lamination components intersect");
      }
    }
  }
}

RationalLamination RationalLamination::from_multicurve(const Multicurve& m) {
  std::vector<WeightedCurve> parts;
  for (auto& c : decompose(m)) parts.push_back({c.curve, Rational(c.multiplicity)});
  return RationalLamination(m.frame(), std::move(parts));
}

std::vector<Rational> RationalLamination::coordinates() const {
  std::vector<Rational> out(frame_->edge_count(), Rational(0));
  for (const auto& wc : components_) {
    for (std::size_t e = 0; e < out.size(); ++e) out[e] += wc.weight * Rational(wc.curve.weights()[e]);
  }
  return out;
}

RationalLamination lam_sum(const RationalLamination& a, const RationalLamination& b) {
  if (!same_frame(a.frame(), b.frame())) throw Error(ErrorKind::FrameMismatch, "laminations in different frames");
  std::vector<WeightedCurve> parts = a.components();
  for (const auto& wc : b.components()) {
    auto it = std::find_if(parts.begin(), parts.end(), [&](const WeightedCurve& p) { return p.curve == wc.curve; });
    if (it != parts.end()) {
      it->weight += wc.weight;
    } else {
      parts.push_back(wc);
    }
  }
  return RationalLamination(a.frame(), std::move(parts));
}

RationalLamination lam_scale(const RationalLamination& a, const Rational& factor) {
  if (factor <= 0) throw Error(ErrorKind::InvalidInput, "scale factor must be positive");
  std::vector<WeightedCurve> parts = a.components();
  for (auto& p : parts) p.weight *= factor;
  return RationalLamination(a.frame(), std::move(parts));
}

Rational lam_intersection(const RationalLamination& a, const RationalLamination& b) {
  if (!same_frame(a.frame(), b.frame())) throw Error(ErrorKind::FrameMismatch, "laminations in different frames");
  Rational sum = 0;
  for (const auto& x : a.components()) {
    for (const auto& y : b.components()) {
      sum += x.weight * y.weight * Rational(intersection_number(x.curve, y.curve));
    }
  }
  return sum;
}

}  // namespace lamistrat
