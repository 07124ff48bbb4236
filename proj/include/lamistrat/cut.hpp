#pragma once

#include <vector>

#include "lamistrat/multicurve.hpp"

namespace lamistrat {

// One complementary region of a curve: genus, punctures inside it, and the
// number of boundary circles it receives from the cut.
struct Region {
  int genus = 0;
  int punctures = 0;
  int boundary = 0;

  friend bool operator==(const Region&, const Region&) = default;
  friend auto operator<=>(const Region&, const Region&) = default;
};

struct CutInvariants {
  std::vector<Region> regions;  // sorted descending
  bool separating = false;
};

// Cuts the surface along a connected curve. Throws NotConnected.
CutInvariants cut_invariants(const Multicurve& c);

bool is_separating(const Multicurve& c);

}  // namespace lamistrat
