#include "lamistrat/fixtures.hpp"

#include <array>
#include <mutex>

#include "lamistrat/error.hpp"
#include "lamistrat/json_io.hpp"

namespace lamistrat {

namespace detail {
extern const std::string_view kFixtureS11;
extern const std::string_view kFixtureS05;
extern const std::string_view kFixtureS12;
extern const std::string_view kFixtureS21;
}  // namespace detail

namespace {

struct Source {
  std::string_view name;
  const std::string_view* text;
};

const std::array<Source, 4> kSources{{
    {"s_1_1", &detail::kFixtureS11},
    {"s_0_5", &detail::kFixtureS05},
    {"s_1_2", &detail::kFixtureS12},
    {"s_2_1", &detail::kFixtureS21},
}};

}  // namespace

const std::vector<WeightVector>& Fixture::named(const std::string& key) const {
  auto it = curves.find(key);
  if (it == curves.end()) {
    throw Error(ErrorKind::InvalidInput, "fixture " + name + " has no curve list '" + key + "'");
  }
  return it->second;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& s : kSources) out.emplace_back(s.name);
  return out;
}

std::string fixture_source(std::string_view name) {
  for (const auto& s : kSources) {
    if (s.name == name) return std::string(*s.text);
  }
  throw Error(ErrorKind::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

Fixture fixture_from_json_text(std::string name, const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& ex) {
    throw Error(ErrorKind::InvalidInput, std::string("bad fixture JSON: ") + ex.what());
  }
  Fixture fx;
  fx.name = std::move(name);
  fx.frame = make_frame(triangulation_from_json(doc));
  if (doc.contains("curves")) {
    for (const auto& [key, list] : doc.at("curves").items()) {
      auto& dest = fx.curves[key];
      for (const auto& w : list) dest.push_back(weights_from_json(w));
    }
  }
  return fx;
}

const Fixture& fixture(std::string_view name) {
  static std::mutex lock;
  static std::map<std::string, Fixture, std::less<>> cache;
  std::lock_guard guard(lock);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  std::string text = fixture_source(name);
  auto [it, inserted] = cache.emplace(std::string(name), fixture_from_json_text(std::string(name), text));
  return it->second;
}

}  // namespace lamistrat
