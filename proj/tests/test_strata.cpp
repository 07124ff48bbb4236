#include <doctest.h>

#include "helpers.hpp"
#include "lamistrat/error.hpp"
#include "lamistrat/lamination.hpp"
#include "lamistrat/strata.hpp"

using namespace lamistrat;
using test::curve;

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

std::vector<Multicurve> named(const char* fx, const char* key) {
  std::vector<Multicurve> out;
  for (const auto& w : fixture(fx).named(key)) out.push_back(validate(fixture(fx).frame, w));
  return out;
}

}  // namespace

TEST_CASE("support_of") {
  const Frame& f = test::frame("s_1_1");
  Multicurve c = curve("s_1_1", {0, 1, 1});
  Support s = support_of(RationalLamination(f, {{c, Rational(3)}}));
  CHECK(s.components() == std::vector<Multicurve>{c});

  auto pants = named("s_0_5", "pants");
  const Frame& g = test::frame("s_0_5");
  Support t = support_of(RationalLamination(g, {{pants[0], Rational(2)}, {pants[1], Rational(5)}}));
  CHECK(t.size() == 2);
  CHECK(kind_of([&] { support_of(RationalLamination::empty(f)); }) == ErrorKind::EmptyLamination);
}

TEST_CASE("Support validation") {
  const Frame& f = test::frame("s_1_1");
  CHECK(kind_of([&] { Support(f, {curve("s_1_1", {0, 1, 1}), curve("s_1_1", {1, 0, 1})}); }) ==
        ErrorKind::InvalidInput);
  auto chain = named("s_0_5", "generators");
  CHECK(kind_of([&] { Support(test::frame("s_0_5"), {chain[0], chain[1]}); }) == ErrorKind::NonDisjointComponents);
  CHECK(kind_of([&] { Support(f, {curve("s_1_1", {0, 2, 2})}); }) == ErrorKind::NotConnected);
  CHECK(kind_of([&] { Support(f, {}); }) == ErrorKind::InvalidInput);
  CHECK(Support(f, {}, true).size() == 0);
}

TEST_CASE("depth and order") {
  CHECK(depth(Support::of_multicurve(curve("s_1_1", {0, 1, 1}))) == 0);
  auto p05 = named("s_0_5", "pants");
  CHECK(depth(Support(test::frame("s_0_5"), p05)) == 1);
  auto p21 = named("s_2_1", "pants");
  CHECK(depth(Support(test::frame("s_2_1"), p21)) == 3);

  Support one(test::frame("s_0_5"), {p05[0]});
  Support two(test::frame("s_0_5"), p05);
  CHECK(leq(one, two));
  CHECK(!leq(two, one));
  CHECK(leq(two, two));
  CHECK(kind_of([&] { leq(one, Support::of_multicurve(curve("s_1_1", {0, 1, 1}))); }) == ErrorKind::FrameMismatch);
}

TEST_CASE("enumerate_strata") {
  StrataPoset p = enumerate_strata(test::frame("s_1_1"), 4);
  CHECK(p.size() == 6);
  for (const auto& s : p.strata()) CHECK(s.depth == 0);

  StrataPoset q = enumerate_strata(test::frame("s_0_5"), 10);
  CHECK(q.max_depth() == 1);
  CHECK(q.index_of(Support(test::frame("s_0_5"), named("s_0_5", "pants"))).has_value());
  GenericStratifiedSet g = q.as_generic();
  for (int i = 0; i < q.size(); ++i) CHECK(generic_depth(g, i) == q.stratum(i).cone_dim - 1);
  CHECK(check_stratification_axioms(q).ok());

  CHECK(kind_of([] { enumerate_strata(test::frame("s_0_5"), 0); }) == ErrorKind::InvalidInput);
  StrataOptions tight;
  tight.budget = 3;
  CHECK(kind_of([&] { enumerate_strata(test::frame("s_0_5"), 10, tight); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("empty stratum adjoined") {
  StrataOptions opts;
  opts.include_empty = true;
  StrataPoset p = enumerate_strata(test::frame("s_0_5"), 10, opts);
  CHECK(p.includes_empty());
  CHECK(p.max_depth() == 2);
  CHECK(check_stratification_axioms(p).ok());
}

TEST_CASE("axioms catch a missing face") {
  auto pants = named("s_0_5", "pants");
  const Frame& f = test::frame("s_0_5");
  StrataPoset bad = StrataPoset::unclosed(f, {Support(f, pants), Support(f, {pants[0]})});
  AxiomReport r = check_stratification_axioms(bad);
  CHECK(!r.ok());
  StrataPoset empty = StrataPoset::unclosed(f, {});
  CHECK(check_stratification_axioms(empty).ok());
}

TEST_CASE("generic depth") {
  GenericStratifiedSet chain(3, {{2, 1}, {1, 0}});
  CHECK(generic_depth(chain, 0) == 2);
  CHECK(generic_depth(chain) == 2);
  GenericStratifiedSet antichain(4, {});
  for (int i = 0; i < 4; ++i) CHECK(generic_depth(antichain, i) == 0);
  GenericStratifiedSet cycle(2, {{0, 1}, {1, 0}});
  CHECK(kind_of([&] { generic_depth(cycle, 0); }) == ErrorKind::CycleDetected);
}

TEST_CASE("poset automorphisms") {
  // 0, 1 below 2; 3 isolated.
  GenericStratifiedSet g(4, {{0, 2}, {1, 2}});
  CHECK(check_poset_automorphism(g, {0, 1, 2, 3}));
  CHECK(check_poset_automorphism(g, {1, 0, 2, 3}));
  CHECK(!check_poset_automorphism(g, {2, 1, 0, 3}));
  CHECK(!check_poset_automorphism(g, {0, 1, 3, 2}));
  CHECK(kind_of([&] { check_poset_automorphism(g, {0, 0, 2, 3}); }) == ErrorKind::NotBijective);
}

TEST_CASE("dimension formulas") {
  Dimensions a = dim_formulas(0, 5);
  CHECK(a.ml == 4);
  CHECK(a.pml == 3);
  CHECK(a.u_curve == 2);
  Dimensions b = dim_formulas(2, 1);
  CHECK(b.ml == 8);
  CHECK(b.pml == 7);
  CHECK(b.u_curve == 6);
  Dimensions c = dim_formulas(2, 1, MinimalParams{1, 0, 1});
  REQUIRE(c.u_minimal.has_value());
  CHECK(*c.u_minimal == -3);
  CHECK(c.u_minimal_degenerate);
}
