#pragma once

#include "json.hpp"

#include "lamistrat/mapping_class.hpp"
#include "lamistrat/multicurve.hpp"
#include "lamistrat/strata.hpp"
#include "lamistrat/triangulation.hpp"
#include "lamistrat/weights.hpp"

namespace lamistrat {

using Json = nlohmann::ordered_json;

// Signed entries s*(e+1): the magnitude offset keeps edge 0's sign visible.
Triangulation triangulation_from_json(const Json& doc);
Json triangulation_to_json(const Triangulation& tri);

// Weights are written as numbers when they fit in 64 bits, else as strings.
Json weights_to_json(std::span<const Weight> weights);
WeightVector weights_from_json(const Json& doc);

// {"strata": [{"id", "components", "depth"}], "cover_relation": [[lower, upper]]}
Json poset_to_json(const StrataPoset& p);
// Hasse diagram, edges pointing upwards.
std::string poset_to_dot(const StrataPoset& p);

// {"moves": [{"flip": e} | {"relabel": {"edges": perm, "reverse": bool}}]}
Json mapping_class_to_json(const MappingClass& f);
MappingClass mapping_class_from_json(const Frame& frame, const Json& doc);

}  // namespace lamistrat
