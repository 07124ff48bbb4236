#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "lamistrat/cut.hpp"
#include "lamistrat/enumerate.hpp"
#include "lamistrat/error.hpp"
#include "lamistrat/lamination.hpp"

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

// Slope p/q on the punctured torus crosses the edges |p|, |q|, |p-q| times.
Multicurve slope(std::int64_t p, std::int64_t q) {
  return curve("s_1_1", {std::abs(p), std::abs(q), std::abs(p - q)});
}

}  // namespace

TEST_CASE("validate") {
  Multicurve c = curve("s_1_1", {0, 1, 1});
  CHECK(is_connected(c));
  CHECK(kind_of([] { curve("s_1_1", {2, 2, 2}); }) == ErrorKind::PeripheralComponent);
  CHECK(kind_of([] { curve("s_1_1", {1, 1, 1}); }) == ErrorKind::ParityViolation);
  CHECK(kind_of([] { curve("s_1_1", {4, 1, 1}); }) == ErrorKind::TriangleInequalityViolation);
  CHECK(kind_of([] { curve("s_1_1", {0, 1}); }) == ErrorKind::InvalidInput);
  CHECK(validate(test::frame("s_1_1"), W({0, 0, 0})).empty());
}

TEST_CASE("decompose") {
  auto parts = decompose(curve("s_1_1", {0, 2, 2}));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].curve == curve("s_1_1", {0, 1, 1}));
  CHECK(parts[0].multiplicity == 2);

  auto one = decompose(curve("s_1_1", {1, 1, 2}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].curve == curve("s_1_1", {1, 1, 2}));
  CHECK(one[0].multiplicity == 1);

  // A pants decomposition splits back into its curves.
  const Fixture& fx = fixture("s_2_1");
  WeightVector sum(fx.frame->edge_count(), 0);
  for (const auto& w : fx.named("pants")) sum = add(sum, w);
  auto pants = decompose(validate(fx.frame, sum));
  CHECK(pants.size() == 4);
  for (const auto& p : pants) CHECK(p.multiplicity == 1);
}

TEST_CASE("strip_peripheral") {
  const Frame& f = test::frame("s_1_1");
  StripResult a = strip_peripheral(f, W({2, 2, 2}));
  CHECK(a.curve.empty());
  CHECK(a.stripped == std::vector<int>{0});
  StripResult b = strip_peripheral(f, W({2, 3, 3}));
  CHECK(b.curve == curve("s_1_1", {0, 1, 1}));
  CHECK(b.stripped == std::vector<int>{0});
  StripResult c = strip_peripheral(f, W({0, 1, 1}));
  CHECK(c.stripped.empty());
  CHECK(vertex_link(*f, 0) == W({2, 2, 2}));
}

TEST_CASE("transport_flip on the punctured torus") {
  const Frame& f = test::frame("s_1_1");
  CHECK(transport_flip(NormalCoords(f, W({0, 1, 1})), 2).weights() == W({0, 1, 1}));
  CHECK(transport_flip(NormalCoords(f, W({1, 1, 0})), 2).weights() == W({1, 1, 2}));
  NormalCoords m(f, W({3, 5, 2}));
  CHECK(transport_flip(transport_flip(m, 2), 2).weights() == m.weights());
  CHECK(kind_of([&] { transport_flip(m, 7); }) == ErrorKind::InvalidInput);
}

TEST_CASE("disjointness") {
  CHECK(is_disjoint(curve("s_1_1", {0, 1, 1}), curve("s_1_1", {0, 1, 1})));
  CHECK(!is_disjoint(curve("s_1_1", {0, 1, 1}), curve("s_1_1", {1, 0, 1})));
  const Fixture& fx = fixture("s_0_5");
  const auto& pants = fx.named("pants");
  CHECK(is_disjoint(validate(fx.frame, pants[0]), validate(fx.frame, pants[1])));
}

TEST_CASE("intersection numbers match slope determinants") {
  CHECK(intersection_number(slope(0, 1), slope(1, 0)) == 1);
  CHECK(intersection_number(slope(0, 1), slope(0, 1)) == 0);
  for (std::int64_t q = 1; q <= 5; ++q)
    for (std::int64_t p = -5; p <= 5; ++p)
      for (std::int64_t s = 1; s <= 5; ++s)
        for (std::int64_t r = -5; r <= 5; ++r) {
          if (std::gcd(p, q) != 1 || std::gcd(r, s) != 1) continue;
          CHECK(intersection_number(slope(p, q), slope(r, s)) == std::abs(p * s - q * r));
        }
}

TEST_CASE("intersection is symmetric and additive over components") {
  auto curves = enumerate_curves(test::frame("s_1_2"), 8);
  for (std::size_t a = 0; a < curves.size(); ++a)
    for (std::size_t b = 0; b < curves.size(); ++b)
      CHECK(intersection_number(curves[a], curves[b]) == intersection_number(curves[b], curves[a]));
  Multicurve c = curve("s_1_2", {0, 1, 1, 0, 0, 1});
  Multicurve d = curve("s_1_2", {0, 1, 1, 1, 1, 0});
  Multicurve cd = validate(c.frame(), add(c.weights(), d.weights()));
  for (const auto& probe : curves) {
    CHECK(intersection_number(cd, probe) == intersection_number(c, probe) + intersection_number(d, probe));
  }
}

TEST_CASE("rational laminations") {
  const Frame& f = test::frame("s_1_1");
  RationalLamination l(f, {{curve("s_1_1", {0, 1, 1}), Rational(3)}});
  RationalLamination m(f, {{curve("s_1_1", {1, 0, 1}), Rational(2)}});
  CHECK(lam_intersection(l, m) == 6);
  CHECK(lam_intersection(lam_scale(l, Rational(1, 3)), m) == 2);
  CHECK(lam_intersection(l, l) == 0);

  const Fixture& fx = fixture("s_0_5");
  const auto& pants = fx.named("pants");
  Multicurve c1 = validate(fx.frame, pants[0]), c2 = validate(fx.frame, pants[1]);
  Multicurve probe = validate(fx.frame, fx.named("generators")[1]);
  RationalLamination a(fx.frame, {{c1, Rational(1, 2)}});
  RationalLamination b(fx.frame, {{c2, Rational(5)}});
  RationalLamination mu(fx.frame, {{probe, Rational(7, 3)}});
  CHECK(lam_intersection(a, b) == 0);
  CHECK(lam_intersection(lam_sum(a, b), mu) == lam_intersection(a, mu) + lam_intersection(b, mu));
}

TEST_CASE("cut invariants") {
  CutInvariants t = cut_invariants(curve("s_1_1", {0, 1, 1}));
  CHECK(!t.separating);
  CHECK(t.regions == std::vector<Region>{{0, 1, 2}});

  const Fixture& fx = fixture("s_1_2");
  CutInvariants s = cut_invariants(validate(fx.frame, fx.named("separating")[0]));
  CHECK(s.separating);
  CHECK(s.regions == std::vector<Region>{{1, 0, 1}, {0, 2, 1}});

  for (const auto& c : enumerate_curves(test::frame("s_1_1"), 10)) CHECK(!is_separating(c));
}

TEST_CASE("separating iff even against homology probes") {
  for (const char* name : {"s_1_2", "s_2_1"}) {
    const Fixture& fx = fixture(name);
    std::vector<Multicurve> probes;
    for (const auto& w : fx.named("homology_probes")) probes.push_back(validate(fx.frame, w));
    for (const auto& c : enumerate_curves(fx.frame, 10)) {
      bool even = true;
      for (const auto& b : probes) even = even && intersection_number(c, b) % 2 == 0;
      CAPTURE(format_weights(c.weights()));
      CHECK(even == is_separating(c));
    }
  }
}

TEST_CASE("enumeration") {
  auto two = enumerate_curves(test::frame("s_1_1"), 2);
  CHECK(two == std::vector<Multicurve>{curve("s_1_1", {0, 1, 1}), curve("s_1_1", {1, 0, 1}),
                                       curve("s_1_1", {1, 1, 0})});
  CHECK(enumerate_curves(test::frame("s_1_1"), 4).size() == 6);
  CHECK(kind_of([] { enumerate_curves(test::frame("s_2_1"), 20, 10); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("weights parsing") {
  CHECK(parse_weights("1,0,2") == W({1, 0, 2}));
  CHECK(parse_weights("[1, 0, 2]") == W({1, 0, 2}));
  CHECK(kind_of([] { parse_weights("1,x"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_weights("-1,2"); }) == ErrorKind::InvalidInput);
  CHECK(format_weights(W({3, 4})) == "3,4");
  CHECK(parse_rational("3/6") == Rational(1, 2));
}
