#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lamistrat/triangulation.hpp"
#include "lamistrat/weights.hpp"

namespace lamistrat {

// A built-in surface: its triangulation plus named curve lists (pants
// decomposition, twist generator curves, separating curve, probes).
struct Fixture {
  std::string name;
  Frame frame;
  std::map<std::string, std::vector<WeightVector>> curves;

  const std::vector<WeightVector>& named(const std::string& key) const;
};

std::vector<std::string> fixture_names();

// Throws UnknownFixture.
const Fixture& fixture(std::string_view name);

// The JSON document a fixture is built from (same text as data/fixtures/).
std::string fixture_source(std::string_view name);

Fixture fixture_from_json_text(std::string name, const std::string& text);

}  // namespace lamistrat
