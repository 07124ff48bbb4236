#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lamistrat/multicurve.hpp"
#include "lamistrat/strata.hpp"

namespace lamistrat {

struct FlipMove {
  int edge = 0;
  friend bool operator==(const FlipMove&, const FlipMove&) = default;
};

// Edge e becomes edge perm[e]; `reverse` also flips the orientation.
struct RelabelMove {
  std::vector<int> perm;
  bool reverse = false;
  friend bool operator==(const RelabelMove&, const RelabelMove&) = default;
};

using Move = std::variant<FlipMove, RelabelMove>;

// A word of flips and relabelings that starts and ends at the same labeled
// triangulation, so it acts on coordinates in that frame.
class MappingClass {
 public:
  // Throws NotFlippable, NotBijective, NotClosed.
  MappingClass(Frame frame, std::vector<Move> moves);

  static MappingClass identity(Frame frame) { return MappingClass(std::move(frame), {}); }

  const Frame& frame() const { return frame_; }
  const std::vector<Move>& moves() const { return moves_; }
  bool orientation_reversing() const { return reversing_; }
  std::size_t flip_count() const;

  // Raw action on a weight vector of the frame (no validation).
  WeightVector act(const WeightVector& w) const;

 private:
  struct Step {
    bool is_flip = true;
    FlipRecord record;
    std::vector<int> perm;
  };

  Frame frame_;
  std::vector<Move> moves_;
  std::vector<Step> steps_;
  bool reversing_ = false;
};

// Throws FrameMismatch, or WeightCapExceeded when a result weight exceeds `cap`.
NormalCoords apply(const MappingClass& f, const NormalCoords& m, std::optional<Weight> cap = std::nullopt);
Multicurve apply(const MappingClass& f, const Multicurve& m, std::optional<Weight> cap = std::nullopt);

// First f, then g. Throws FrameMismatch.
MappingClass compose(const MappingClass& f, const MappingClass& g);
MappingClass invert(const MappingClass& f);
MappingClass power(const MappingClass& f, int k);

struct TwistOptions {
  int shorten_search_depth = 4;        // breadth-first fallback when greedy stalls
  std::int64_t max_search_states = 200000;
};

// Dehn twist about a connected essential curve. Throws NotConnected,
// EmptyLamination, NotShortenable.
MappingClass twist(const Multicurve& c, const TwistOptions& options = {});

// Twists about the fixture's "generators" curves, followed by one
// orientation-reversing symmetry. Cached per fixture. Throws UnknownFixture.
const std::vector<MappingClass>& builtin_generators(const std::string& fixture_name);

// Some orientation-reversing mapping class of the frame.
MappingClass find_reflection(const Frame& frame, int max_flips = 6);

// Any action on weight vectors; the result may be invalid.
using CurveAction = std::function<WeightVector(const WeightVector&)>;

struct PreservationViolation {
  std::string check;  // validity, connected, depth, disjoint, sum, order
  int stratum = -1;
  std::string detail;
};

struct PreservationReport {
  std::int64_t strata_checked = 0;
  std::int64_t pairs_checked = 0;
  std::vector<PreservationViolation> violations;
  bool image_in_window = false;   // every image support is a stratum of the poset
  bool automorphism_checked = false;
  bool automorphism_ok = false;

  bool ok() const { return violations.empty() && (!automorphism_checked || automorphism_ok); }
};

PreservationReport verify_preservation(const MappingClass& f, const StrataPoset& p);
PreservationReport verify_preservation(const CurveAction& f, const StrataPoset& p);

// Induced map on strata indices when all image supports lie in p; nullopt
// otherwise. Entries are -1 where an image is invalid.
std::optional<std::vector<int>> induced_strata_map(const CurveAction& f, const StrataPoset& p);

}  // namespace lamistrat
