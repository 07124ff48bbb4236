#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "lamistrat/fixtures.hpp"
#include "lamistrat/multicurve.hpp"

namespace test {

inline lamistrat::WeightVector W(std::initializer_list<std::int64_t> values) {
  std::vector<std::int64_t> v(values);
  return lamistrat::to_weights(v);
}

inline const lamistrat::Frame& frame(const char* name) { return lamistrat::fixture(name).frame; }

inline lamistrat::Multicurve curve(const char* name, std::initializer_list<std::int64_t> values) {
  return lamistrat::validate(frame(name), W(values));
}

}  // namespace test
