#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lamistrat/multicurve.hpp"

namespace lamistrat {

// Cap on enumeration output; LAMISTRAT_BUDGET overrides the default.
std::int64_t enumeration_budget();

// Calls `visit` for every nonzero weight vector satisfying the triangle
// conditions with total weight <= max_total. Throws BudgetExceeded after
// `budget` vectors.
void for_each_normal_vector(const Triangulation& tri, std::int64_t max_total,
                            const std::function<void(std::span<const std::int64_t>)>& visit,
                            std::int64_t budget = enumeration_budget());

// Connected essential curves with total weight <= max_total, sorted.
std::vector<Multicurve> enumerate_curves(const Frame& frame, std::int64_t max_total,
                                         std::int64_t budget = enumeration_budget());

}  // namespace lamistrat
