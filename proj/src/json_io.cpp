#include "lamistrat/json_io.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>

#include "lamistrat/error.hpp"

namespace lamistrat {

Triangulation triangulation_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("edges") || !doc.contains("triangles")) {
    throw Error(ErrorKind::InvalidInput, "triangulation JSON needs \"edges\" and \"triangles\"");
  }
  const int E = doc.at("edges").get<int>();
  std::vector<Triangle> tris;
  for (const auto& t : doc.at("triangles")) {
    if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::InvalidInput, "triangles must be triples");
    Triangle tri;
    for (int j = 0; j < 3; ++j) {
      int s = t[j].get<int>();
      if (s == 0) throw Error(ErrorKind::InvalidInput, "signed edge 0 is ambiguous; use +-(e+1)");
      tri[j] = {std::abs(s) - 1, s > 0};
    }
    tris.push_back(tri);
  }
  return Triangulation::build(E, std::move(tris));
}

Json triangulation_to_json(const Triangulation& tri) {
  Json tris = Json::array();
  for (const auto& t : tri.triangles()) {
    Json row = Json::array();
    for (const auto& s : t) row.push_back(s.forward ? s.edge + 1 : -(s.edge + 1));
    tris.push_back(row);
  }
  return Json{{"edges", tri.edge_count()}, {"triangles", tris}};
}

Json weights_to_json(std::span<const Weight> weights) {
  Json out = Json::array();
  for (const auto& w : weights) {
    if (w <= std::numeric_limits<std::int64_t>::max()) {
      out.push_back(static_cast<std::int64_t>(w));
    } else {
      out.push_back(w.str());
    }
  }
  return out;
}

WeightVector weights_from_json(const Json& doc) {
  if (!doc.is_array()) throw Error(ErrorKind::InvalidInput, "weights must be a JSON array");
  WeightVector out;
  for (const auto& v : doc) {
    Weight w;
    if (v.is_number_integer()) {
      w = v.get<std::int64_t>();
    } else if (v.is_string()) {
      try {
        w = Weight(v.get<std::string>());
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidInput, "bad weight string");
      }
    } else {
      throw Error(ErrorKind::InvalidInput, "weights must be integers");
    }
    if (w < 0) throw Error(ErrorKind::InvalidInput, "weights must be nonnegative");
    out.push_back(std::move(w));
  }
  return out;
}

Json poset_to_json(const StrataPoset& p) {
  Json strata = Json::array();
  for (int i = 0; i < p.size(); ++i) {
    Json comps = Json::array();
    for (const auto& c : p.stratum(i).support.components()) comps.push_back(weights_to_json(c.weights()));
    strata.push_back(Json{{"id", i}, {"components", comps}, {"depth", p.stratum(i).depth}});
  }
  Json cover = Json::array();
  for (auto [lo, hi] : p.cover_relation()) cover.push_back(Json::array({lo, hi}));
  return Json{{"strata", strata}, {"cover_relation", cover}};
}

std::string poset_to_dot(const StrataPoset& p) {
  std::ostringstream out;
  out << "digraph strata {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i) {
    out << "  s" << i << " [label=\"";
    const auto& comps = p.stratum(i).support.components();
    if (comps.empty()) out << "empty";
    for (std::size_t k = 0; k < comps.size(); ++k) {
      if (k) out << " + ";
      out << "(" << format_weights(comps[k].weights()) << ")";
    }
    out << "\"];\n";
  }
  for (auto [lo, hi] : p.cover_relation()) out << "  s" << lo << " -> s" << hi << ";\n";
  out << "}\n";
  return out.str();
}

Json mapping_class_to_json(const MappingClass& f) {
  Json moves = Json::array();
  for (const auto& mv : f.moves()) {
    if (const auto* fl = std::get_if<FlipMove>(&mv)) {
      moves.push_back(Json{{"flip", fl->edge}});
    } else {
      const auto& r = std::get<RelabelMove>(mv);
      moves.push_back(Json{{"relabel", Json{{"edges", r.perm}, {"reverse", r.reverse}}}});
    }
  }
  return Json{{"moves", moves}};
}

MappingClass mapping_class_from_json(const Frame& frame, const Json& doc) {
  if (!doc.is_object() || !doc.contains("moves") || !doc.at("moves").is_array()) {
    throw Error(ErrorKind::InvalidInput, "mapping class JSON needs a \"moves\" array");
  }
  std::vector<Move> moves;
  for (const auto& m : doc.at("moves")) {
    if (m.contains("flip")) {
      moves.push_back(FlipMove{m.at("flip").get<int>()});
    } else if (m.contains("relabel")) {
      const auto& r = m.at("relabel");
      moves.push_back(RelabelMove{r.at("edges").get<std::vector<int>>(), r.value("reverse", false)});
    } else {
      throw Error(ErrorKind::InvalidInput, "move must be a flip or a relabel");
    }
  }
  return MappingClass(frame, std::move(moves));
}

}  // namespace lamistrat
