#include <doctest.h>

#include "helpers.hpp"
#include "lamistrat/error.hpp"
#include "lamistrat/json_io.hpp"
#include "lamistrat/triangulation.hpp"

using namespace lamistrat;

namespace {

Triangulation from_signed(int edges, std::vector<std::array<int, 3>> triples) {
  Json doc{{"edges", edges}, {"triangles", triples}};
  return triangulation_from_json(doc);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("once-punctured torus") {
  Triangulation t = from_signed(3, {{1, 2, 3}, {-1, -2, -3}});
  CHECK(t.edge_count() == 3);
  CHECK(t.triangle_count() == 2);
  CHECK(t.vertex_count() == 1);
  CHECK(t.signature() == SurfaceSig{1, 1});
  CHECK(t.signature().complexity() == 1);
}

TEST_CASE("fixture signatures and Euler count") {
  struct Case {
    const char* name;
    int g, n, E, F;
  };
  for (const Case& c : {Case{"s_1_1", 1, 1, 3, 2}, Case{"s_0_5", 0, 5, 9, 6}, Case{"s_1_2", 1, 2, 6, 4},
                        Case{"s_2_1", 2, 1, 9, 6}}) {
    const Triangulation& t = *test::frame(c.name);
    CAPTURE(c.name);
    CHECK(t.signature() == SurfaceSig{c.g, c.n});
    CHECK(t.edge_count() == c.E);
    CHECK(t.triangle_count() == c.F);
    CHECK(t.vertex_count() == c.n);
    CHECK(-c.E + c.F == 2 - 2 * c.g - c.n);
  }
}

TEST_CASE("invalid triangulations") {
  CHECK(kind_of([] { from_signed(9, {{1, 2, 3}, {-1, 5, 5}, {-2, 5, 6}}); }) == ErrorKind::EdgeDegree);
  CHECK(kind_of([] { from_signed(3, {{1, 1, 2}, {-2, 3, -3}}); }) == ErrorKind::SelfFolded);
  CHECK(kind_of([] { from_signed(6, {{1, 2, 3}, {-1, -2, -3}, {4, 5, 6}, {-4, -5, -6}}); }) ==
        ErrorKind::Disconnected);
  CHECK(kind_of([] { triangulation_from_json(Json{{"edges", 3}}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("flip on the punctured torus") {
  const Triangulation& t = *test::frame("s_1_1");
  auto [t2, rec] = flip(t, 2);
  CHECK(rec.flipped_edge == 2);
  std::array<int, 4> sides = rec.quad_sides;
  std::sort(sides.begin(), sides.end());
  CHECK(sides == std::array<int, 4>{0, 0, 1, 1});
  CHECK(t2.edge_count() == 3);
  CHECK(t2.triangle_count() == 2);
  CHECK(t2.signature() == SurfaceSig{1, 1});
}

TEST_CASE("flip is an involution and preserves the signature") {
  for (const auto& name : fixture_names()) {
    const Triangulation& t = *fixture(name).frame;
    for (int e = 0; e < t.edge_count(); ++e) {
      if (!is_flippable(t, e)) continue;
      CAPTURE(name);
      CAPTURE(e);
      auto [once, rec] = flip(t, e);
      CHECK(once.signature() == t.signature());
      auto [twice, rec2] = flip(once, e);
      CHECK(twice.same_as(t));
      CHECK(canonical_key(twice) == canonical_key(t));
    }
  }
}

TEST_CASE("json round trip") {
  for (const auto& name : fixture_names()) {
    const Triangulation& t = *fixture(name).frame;
    CHECK(triangulation_from_json(triangulation_to_json(t)).same_as(t));
  }
}

TEST_CASE("relabel and isomorphisms") {
  const Triangulation& t = *test::frame("s_1_2");
  auto autos = find_isomorphisms(t, t, false);
  REQUIRE(!autos.empty());
  std::vector<int> id(t.edge_count());
  for (int e = 0; e < t.edge_count(); ++e) id[e] = e;
  CHECK(std::find(autos.begin(), autos.end(), id) != autos.end());
  for (const auto& p : autos) CHECK(relabel(t, p, false).same_as(t));
}
