#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lamistrat {

using Weight = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using WeightVector = std::vector<Weight>;

// Per-edge bound above which arc tracing refuses to run.
inline constexpr std::int64_t kDefaultWeightCap = 1'000'000;

WeightVector to_weights(std::span<const std::int64_t> values);

// Converts for tracing; throws WeightCapExceeded if any entry exceeds `cap`.
std::vector<std::int64_t> to_machine(std::span<const Weight> weights,
                                     std::int64_t cap = kDefaultWeightCap);

Weight total(std::span<const Weight> weights);

WeightVector add(std::span<const Weight> a, std::span<const Weight> b);

// "0,1,1" or "[0,1,1]"; entries may be arbitrarily large.
WeightVector parse_weights(const std::string& text);

std::string format_weights(std::span<const Weight> weights);

Rational parse_rational(const std::string& text);

std::string format_rational(const Rational& value);

}  // namespace lamistrat
