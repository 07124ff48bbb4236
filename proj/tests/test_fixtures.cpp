#include <doctest.h>

#include <fstream>
#include <sstream>

#include "lamistrat/error.hpp"
#include "lamistrat/fixtures.hpp"
#include "lamistrat/json_io.hpp"
#include "lamistrat/strata.hpp"

using namespace lamistrat;

TEST_CASE("embedded fixtures match the data files") {
  for (const auto& name : fixture_names()) {
    std::ifstream in(std::string(LAMISTRAT_FIXTURE_DIR) + "/" + name + ".json");
    REQUIRE(in);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(Json::parse(text.str()) == Json::parse(fixture_source(name)));
  }
}

TEST_CASE("fixture curves are valid") {
  for (const auto& name : fixture_names()) {
    const Fixture& fx = fixture(name);
    const int xi = fx.frame->signature().complexity();
    std::vector<Multicurve> pants;
    for (const auto& w : fx.named("pants")) {
      Multicurve c = validate(fx.frame, w);
      CHECK(is_connected(c));
      pants.push_back(c);
    }
    CAPTURE(name);
    CHECK(static_cast<int>(pants.size()) == xi);
    CHECK_NOTHROW(Support(fx.frame, pants));
    for (const auto& w : fx.named("generators")) CHECK(is_connected(validate(fx.frame, w)));
  }
}

TEST_CASE("unknown fixture") {
  CHECK_THROWS_AS(fixture("s_3_3"), Error);
}
