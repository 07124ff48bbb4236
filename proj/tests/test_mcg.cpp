#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lamistrat/enumerate.hpp"
#include "lamistrat/error.hpp"
#include "lamistrat/json_io.hpp"
#include "lamistrat/mapping_class.hpp"
#include "lamistrat/strata.hpp"

using namespace lamistrat;
using test::curve;
using test::W;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidInput;
}

Multicurve slope(std::int64_t p, std::int64_t q) {
  return curve("s_1_1", {std::abs(p), std::abs(q), std::abs(p - q)});
}

// Random sums of window curves with vertex links removed.
std::vector<Multicurve> samples(const char* name, int count, std::uint64_t seed) {
  const Frame& f = test::frame(name);
  auto base = enumerate_curves(f, 8);
  std::mt19937_64 rng(seed);
  std::vector<Multicurve> out;
  for (int i = 0; i < count; ++i) {
    WeightVector w(f->edge_count(), 0);
    for (int k = 0; k < 2; ++k) {
      const auto& c = base[rng() % base.size()].weights();
      const int mult = 1 + static_cast<int>(rng() % 3);
      for (std::size_t e = 0; e < w.size(); ++e) w[e] += c[e] * mult;
    }
    out.push_back(strip_peripheral(f, w).curve);
  }
  return out;
}

}  // namespace

TEST_CASE("identity word") {
  MappingClass id = MappingClass::identity(test::frame("s_1_1"));
  CHECK(apply(id, curve("s_1_1", {0, 1, 1})) == curve("s_1_1", {0, 1, 1}));
  CHECK(id.flip_count() == 0);
  CHECK(!id.orientation_reversing());
}

TEST_CASE("invalid words") {
  const Frame& f = test::frame("s_1_1");
  CHECK(kind_of([&] { MappingClass(f, {FlipMove{2}}); }) == ErrorKind::NotClosed);
  CHECK(kind_of([&] { MappingClass(f, {FlipMove{5}}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { MappingClass(f, {RelabelMove{{0, 0, 1}, false}}); }) == ErrorKind::NotBijective);
  MappingClass other = MappingClass::identity(test::frame("s_0_5"));
  CHECK(kind_of([&] { apply(other, curve("s_1_1", {0, 1, 1})); }) == ErrorKind::FrameMismatch);
}

TEST_CASE("twist about slope 0/1") {
  Multicurve c = slope(0, 1);
  MappingClass T = twist(c);
  CHECK(apply(T, c) == c);
  Multicurve beta = slope(1, 0);
  Multicurve img = beta;
  for (int k = 1; k <= 5; ++k) {
    img = apply(T, img);
    CHECK(intersection_number(img, beta) == k);
    CHECK(intersection_number(img, c) == 1);
  }
  CHECK(kind_of([] { twist(curve("s_1_1", {0, 2, 2})); }) == ErrorKind::NotConnected);
  CHECK(kind_of([] { twist(validate(test::frame("s_1_1"), W({0, 0, 0}))); }) == ErrorKind::EmptyLamination);
}

TEST_CASE("twists fix their core and disjoint curves") {
  for (const char* name : {"s_0_5", "s_1_2", "s_2_1"}) {
    auto curves = enumerate_curves(test::frame(name), 8);
    for (std::size_t i = 0; i < curves.size(); i += 3) {
      MappingClass T = twist(curves[i]);
      CAPTURE(name);
      CAPTURE(format_weights(curves[i].weights()));
      CHECK(apply(T, curves[i]) == curves[i]);
      for (const auto& g : curves) {
        Weight ic = intersection_number(curves[i], g);
        if (ic == 0) CHECK(apply(T, g) == g);
        else CHECK(intersection_number(apply(T, g), g) == ic * ic);
      }
    }
  }
}

TEST_CASE("twist growth law") {
  const Fixture& fx = fixture("s_1_2");
  Multicurve c = validate(fx.frame, fx.named("generators")[0]);
  MappingClass T = twist(c);
  auto curves = enumerate_curves(fx.frame, 6);
  int tried = 0;
  for (const auto& beta : curves) {
    for (const auto& e : curves) {
      Weight ib = intersection_number(c, beta), ie = intersection_number(c, e);
      if (ib == 0 || ie == 0) continue;
      ++tried;
      Multicurve img = beta;
      Weight prev = intersection_number(img, e), diff = -1;
      for (int k = 1; k <= 8; ++k) {
        img = apply(T, img);
        Weight now = intersection_number(img, e);
        diff = now - prev;
        prev = now;
      }
      CHECK(diff == ib * ie);
    }
  }
  CHECK(tried > 0);
}

TEST_CASE("compose, invert, power") {
  const auto& gens = builtin_generators("s_1_2");
  auto pts = samples("s_1_2", 100, 7);
  MappingClass f = gens[0], g = gens[2], h = gens[3];
  MappingClass fi = compose(f, invert(f));
  MappingClass left = compose(compose(f, g), h), right = compose(f, compose(g, h));
  MappingClass ii = invert(invert(g));
  for (const auto& m : pts) {
    CHECK(apply(fi, m) == m);
    CHECK(apply(left, m) == apply(right, m));
    CHECK(apply(ii, m) == apply(g, m));
    CHECK(apply(compose(f, g), m) == apply(g, apply(f, m)));
    CHECK(apply(power(f, 3), m) == apply(f, apply(f, apply(f, m))));
    CHECK(apply(power(f, -1), apply(f, m)) == m);
  }
}

TEST_CASE("builtin generators") {
  const auto& t = builtin_generators("s_1_1");
  REQUIRE(t.size() == 3);
  CHECK(!t[0].orientation_reversing());
  CHECK(!t[1].orientation_reversing());
  CHECK(t[2].orientation_reversing());
  CHECK(kind_of([] { builtin_generators("s_9_9"); }) == ErrorKind::UnknownFixture);

  // Intersection numbers and component counts survive every generator.
  for (const auto& name : fixture_names()) {
    auto curves = enumerate_curves(fixture(name).frame, 6);
    for (const auto& f : builtin_generators(name)) {
      for (std::size_t a = 0; a < curves.size(); ++a) {
        Multicurve fa = apply(f, curves[a]);
        CHECK(is_connected(fa));
        for (std::size_t b = a + 1; b < curves.size(); ++b) {
          CHECK(intersection_number(fa, apply(f, curves[b])) == intersection_number(curves[a], curves[b]));
        }
      }
      for (const auto& m : samples(name.c_str(), 20, 3)) {
        CHECK(decompose(apply(f, m)).size() == decompose(m).size());
      }
    }
  }
}

TEST_CASE("weight cap") {
  MappingClass T = twist(slope(0, 1));
  CHECK(kind_of([&] { apply(power(T, 50), slope(1, 0), Weight(10)); }) == ErrorKind::WeightCapExceeded);
}

TEST_CASE("verify_preservation") {
  StrataPoset p = enumerate_strata(test::frame("s_0_5"), 10);
  CHECK(verify_preservation(MappingClass::identity(p.frame()), p).ok());
  for (const auto& f : builtin_generators("s_0_5")) CHECK(verify_preservation(f, p).ok());

  CurveAction shifted = [](const WeightVector& w) {
    WeightVector out(w.size());
    for (std::size_t e = 0; e < w.size(); ++e) out[(e + 1) % w.size()] = w[e];
    return out;
  };
  PreservationReport bad = verify_preservation(shifted, p);
  CHECK(!bad.ok());
}

TEST_CASE("reflection induces a poset automorphism") {
  StrataPoset p = enumerate_strata(test::frame("s_1_2"), 10);
  MappingClass r = find_reflection(p.frame());
  CHECK(r.orientation_reversing());
  auto sigma = induced_strata_map([&](const WeightVector& w) { return r.act(w); }, p);
  REQUIRE(sigma.has_value());
  CHECK(check_poset_automorphism(p.as_generic(), *sigma));
}

TEST_CASE("mapping class json round trip") {
  for (const auto& f : builtin_generators("s_2_1")) {
    MappingClass g = mapping_class_from_json(f.frame(), mapping_class_to_json(f));
    CHECK(g.moves() == f.moves());
  }
  CHECK(kind_of([] { mapping_class_from_json(test::frame("s_1_1"), Json{{"moves", {{{"spin", 1}}}}}); }) ==
        ErrorKind::InvalidInput);
}
