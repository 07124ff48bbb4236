#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lamistrat/json_io.hpp"
#include "lamistrat/mapping_class.hpp"
#include "lamistrat/multicurve.hpp"

namespace lamistrat {

// Connected essential curves of total weight <= max_total, sorted.
// Throws BudgetExceeded, UnknownFixture.
std::vector<Multicurve> enumerate_vertices(const std::string& fixture_name, std::int64_t max_total);
std::vector<Multicurve> enumerate_vertices(const Frame& frame, std::int64_t max_total);

// Finite full subcomplex of the curve complex on a vertex set. Simplices are
// the cliques of the disjointness graph; only maximal ones are stored.
class CurveComplexSlice {
 public:
  // Vertices are sorted and deduplicated; all must share one frame.
  explicit CurveComplexSlice(std::vector<Multicurve> vertices);

  const Frame& frame() const { return frame_; }
  const std::vector<Multicurve>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }

  bool adjacent(int a, int b) const { return adjacency_[a][b] != 0; }
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
  std::int64_t edge_count() const;

  // Sorted vertex-id lists, in lexicographic order.
  const std::vector<std::vector<int>>& maximal_simplices() const { return maximal_; }
  int max_simplex_size() const;
  bool is_simplex(const std::vector<int>& ids) const;
  // Number of simplices with each vertex count (index 0 unused).
  std::vector<std::int64_t> simplex_counts() const;

  std::optional<int> index_of(const Multicurve& c) const;

 private:
  Frame frame_;
  std::vector<Multicurve> vertices_;
  std::vector<std::vector<char>> adjacency_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<int>> maximal_;
};

CurveComplexSlice build_slice(std::vector<Multicurve> vertices);

struct InducedMap {
  std::vector<WeightVector> images;            // per vertex
  std::vector<std::optional<int>> target;      // index in the target window, if given
  std::vector<int> outside_window;             // ImageOutsideWindow, per vertex
  std::vector<std::string> violations;         // non-curve images, simplicial failures
  bool simplicial = true;  // disjoint iff images disjoint, distinct vertices stay distinct
  bool injective = true;   // among images inside the window

  bool ok() const { return violations.empty() && simplicial && injective; }
};

// Window of the images: all curves of total weight <= target_max_total. When
// `target` (sorted, e.g. from enumerate_vertices) is given, images are also
// located in it.
InducedMap induced_map(const MappingClass& f, const CurveComplexSlice& slice, std::int64_t target_max_total,
                       const std::vector<Multicurve>* target = nullptr);

struct SeparatingPartition {
  std::vector<int> separating;     // vertex indices
  std::vector<int> nonseparating;
  std::int64_t images_checked = 0;
  std::vector<std::string> violations;  // generator images changing class
};

SeparatingPartition separating_classification(const std::string& fixture_name,
                                              const std::vector<Multicurve>& vertices);

Json slice_to_json(const CurveComplexSlice& slice);
std::string slice_to_dot(const CurveComplexSlice& slice);

}  // namespace lamistrat
