#include <doctest.h>

#include "helpers.hpp"
#include "lamistrat/curve_complex.hpp"
#include "lamistrat/cut.hpp"

using namespace lamistrat;
using test::curve;

TEST_CASE("enumerate_vertices") {
  CHECK(enumerate_vertices("s_1_1", 2) ==
        std::vector<Multicurve>{curve("s_1_1", {0, 1, 1}), curve("s_1_1", {1, 0, 1}), curve("s_1_1", {1, 1, 0})});
  auto four = enumerate_vertices("s_1_1", 4);
  CHECK(four.size() == 6);
  CHECK(std::binary_search(four.begin(), four.end(), curve("s_1_1", {1, 1, 2})));
  CHECK(std::binary_search(four.begin(), four.end(), curve("s_1_1", {1, 2, 1})));
  CHECK(std::binary_search(four.begin(), four.end(), curve("s_1_1", {2, 1, 1})));
  CHECK(enumerate_vertices("s_1_1", 0).empty());

  // Windows are nested.
  auto small = enumerate_vertices("s_1_2", 6), big = enumerate_vertices("s_1_2", 10);
  for (const auto& v : small) CHECK(std::binary_search(big.begin(), big.end(), v));
}

TEST_CASE("slices") {
  CurveComplexSlice torus(enumerate_vertices("s_1_1", 10));
  CHECK(torus.edge_count() == 0);
  CHECK(torus.max_simplex_size() == 1);

  CurveComplexSlice sphere(enumerate_vertices("s_0_5", 10));
  CHECK(sphere.edge_count() > 0);
  CHECK(sphere.max_simplex_size() == 2);

  CurveComplexSlice genus2(enumerate_vertices("s_2_1", 8));
  CHECK(genus2.max_simplex_size() == 4);
  std::vector<int> pants;
  for (const auto& w : fixture("s_2_1").named("pants")) pants.push_back(*genus2.index_of(validate(genus2.frame(), w)));
  CHECK(genus2.is_simplex(pants));

  CurveComplexSlice single({curve("s_0_5", {0, 1, 1, 0, 0, 1, 1, 1, 0})});
  CHECK(single.size() == 1);
  CHECK(single.maximal_simplices() == std::vector<std::vector<int>>{{0}});
  CHECK(single.simplex_counts()[1] == 1);

  Json doc = slice_to_json(single);
  CHECK(doc["maximal_simplices"] == Json::array({Json::array({0})}));
  CHECK(slice_to_dot(single).find("graph disjointness") != std::string::npos);
}

TEST_CASE("induced maps") {
  CurveComplexSlice s(enumerate_vertices("s_0_5", 8));
  InducedMap id = induced_map(MappingClass::identity(s.frame()), s, 8, &s.vertices());
  CHECK(id.ok());
  for (int v = 0; v < s.size(); ++v) CHECK(id.target[v] == v);

  auto window = enumerate_vertices("s_0_5", 26);
  for (const auto& f : builtin_generators("s_0_5")) {
    InducedMap m = induced_map(f, s, 26, &window);
    CHECK(m.ok());
    CHECK(m.outside_window.empty());
    for (const auto& t : m.target) CHECK(t.has_value());
  }

  // A window too small to hold the images reports them, without failing.
  const MappingClass& T = builtin_generators("s_0_5").front();
  InducedMap tight = induced_map(T, s, 8);
  CHECK(tight.ok());
  CHECK(!tight.outside_window.empty());
}

TEST_CASE("separating classification") {
  auto vertices = enumerate_vertices("s_1_2", 10);
  SeparatingPartition p = separating_classification("s_1_2", vertices);
  CHECK(p.violations.empty());
  Multicurve sep = validate(vertices.front().frame(), fixture("s_1_2").named("separating")[0]);
  int id = static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), sep) - vertices.begin());
  CHECK(std::binary_search(p.separating.begin(), p.separating.end(), id));
  for (const auto& f : builtin_generators("s_1_2")) CHECK(is_separating(apply(f, sep)));

  SeparatingPartition torus = separating_classification("s_1_1", enumerate_vertices("s_1_1", 8));
  CHECK(torus.separating.empty());
  SeparatingPartition none = separating_classification("s_1_2", {});
  CHECK(none.separating.empty());
  CHECK(none.nonseparating.empty());
}
