#include "lamistrat/curve_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "lamistrat/cut.hpp"
#include "lamistrat/enumerate.hpp"
#include "lamistrat/error.hpp"
#include "lamistrat/fixtures.hpp"

namespace lamistrat {

std::vector<Multicurve> enumerate_vertices(const std::string& fixture_name, std::int64_t max_total) {
  return enumerate_vertices(fixture(fixture_name).frame, max_total);
}

std::vector<Multicurve> enumerate_vertices(const Frame& frame, std::int64_t max_total) {
  if (max_total < 1) return {};
  return enumerate_curves(frame, max_total);
}

CurveComplexSlice::CurveComplexSlice(std::vector<Multicurve> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  const int n = size();
  if (n > 0) frame_ = vertices_.front().frame();
  for (const auto& v : vertices_) {
    if (!same_frame(v.frame(), frame_)) throw Error(ErrorKind::FrameMismatch, "slice vertices in different frames");
  }
  adjacency_.assign(n, std::vector<char>(n, 0));
  neighbors_.assign(n, {});
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (is_disjoint(vertices_[a], vertices_[b])) {
        adjacency_[a][b] = adjacency_[b][a] = 1;
        neighbors_[a].push_back(b);
        neighbors_[b].push_back(a);
      }
    }
  }

  // Bron-Kerbosch with pivoting.
  std::vector<int> clique;
  std::function<void(std::vector<int>, std::vector<int>)> expand = [&](std::vector<int> P, std::vector<int> X) {
    if (P.empty() && X.empty()) {
      auto c = clique;
      std::sort(c.begin(), c.end());
      maximal_.push_back(std::move(c));
      return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (const auto* set : {&P, &X}) {
      for (int u : *set) {
        std::size_t cnt = 0;
        for (int v : P) cnt += adjacency_[u][v];
        if (pivot < 0 || cnt > best) {
          pivot = u;
          best = cnt;
        }
      }
    }
    std::vector<int> candidates;
    for (int v : P)
      if (!adjacency_[pivot][v]) candidates.push_back(v);
    for (int v : candidates) {
      std::vector<int> P2, X2;
      for (int u : P)
        if (adjacency_[v][u]) P2.push_back(u);
      for (int u : X)
        if (adjacency_[v][u]) X2.push_back(u);
      clique.push_back(v);
      expand(std::move(P2), std::move(X2));
      clique.pop_back();
      P.erase(std::find(P.begin(), P.end(), v));
      X.push_back(v);
    }
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  if (n > 0) expand(all, {});
  std::sort(maximal_.begin(), maximal_.end());
}

std::int64_t CurveComplexSlice::edge_count() const {
  std::int64_t total = 0;
  for (const auto& nb : neighbors_) total += static_cast<std::int64_t>(nb.size());
  return total / 2;
}

int CurveComplexSlice::max_simplex_size() const {
  std::size_t best = 0;
  for (const auto& m : maximal_) best = std::max(best, m.size());
  return static_cast<int>(best);
}

bool CurveComplexSlice::is_simplex(const std::vector<int>& ids) const {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || ids[i] >= size()) return false;
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (!adjacent(ids[i], ids[j])) return false;
  }
  return !ids.empty();
}

std::vector<std::int64_t> CurveComplexSlice::simplex_counts() const {
  std::vector<std::int64_t> counts(2, 0);
  counts[1] = size();
  // Count cliques by extending in increasing vertex order.
  std::function<void(int, const std::vector<int>&)> grow = [&](int depth, const std::vector<int>& cand) {
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (static_cast<int>(counts.size()) <= depth + 1) counts.push_back(0);
      ++counts[depth + 1];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (adjacent(cand[i], cand[j])) next.push_back(cand[j]);
      grow(depth + 1, next);
    }
  };
  for (int v = 0; v < size(); ++v) {
    std::vector<int> cand;
    for (int u : neighbors_[v])
      if (u > v) cand.push_back(u);
    grow(1, cand);
  }
  return counts;
}

std::optional<int> CurveComplexSlice::index_of(const Multicurve& c) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), c);
  if (it == vertices_.end() || !(*it == c)) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

CurveComplexSlice build_slice(std::vector<Multicurve> vertices) { return CurveComplexSlice(std::move(vertices)); }

InducedMap induced_map(const MappingClass& f, const CurveComplexSlice& slice, std::int64_t target_max_total,
                       const std::vector<Multicurve>* target) {
  InducedMap out;
  const int n = slice.size();
  if (n == 0) return out;
  if (!same_frame(f.frame(), slice.frame())) throw Error(ErrorKind::FrameMismatch, "mapping class acts on another frame");
  std::vector<std::optional<Multicurve>> curves(n);
  for (int v = 0; v < n; ++v) {
    WeightVector img = f.act(slice.vertices()[v].weights());
    out.images.push_back(img);
    std::optional<int> where;
    try {
      Multicurve c = unchecked_multicurve(NormalCoords(slice.frame(), img));
      auto parts = decompose_raw(c.coords());
      if (parts.size() != 1 || parts[0].multiplicity != 1 || parts[0].peripheral >= 0) {
        out.violations.push_back("vertex " + std::to_string(v) + " image is not a connected essential curve");
      } else {
        curves[v] = c;
        if (total(img) > target_max_total) out.outside_window.push_back(v);
        if (target) {
          auto it = std::lower_bound(target->begin(), target->end(), c);
          if (it != target->end() && *it == c) where = static_cast<int>(it - target->begin());
        }
      }
    } catch (const Error& e) {
      out.violations.push_back("vertex " + std::to_string(v) + " image invalid: " + e.what());
    }
    out.target.push_back(where);
  }

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!curves[a] || !curves[b]) continue;
      if (*curves[a] == *curves[b]) {
        out.simplicial = false;
        out.injective = false;
        out.violations.push_back("vertices " + std::to_string(a) + " and " + std::to_string(b) + " share an image");
        continue;
      }
      if (is_disjoint(*curves[a], *curves[b]) != slice.adjacent(a, b)) {
        out.simplicial = false;
        out.violations.push_back("disjointness of vertices " + std::to_string(a) + ", " + std::to_string(b) +
                                 " not preserved");
      }
    }
  }
  if (target) {
    std::map<int, int> seen;
    for (int v = 0; v < n; ++v) {
      if (!out.target[v]) continue;
      auto [it, inserted] = seen.emplace(*out.target[v], v);
      if (!inserted) out.injective = false;
    }
  }
  return out;
}

SeparatingPartition separating_classification(const std::string& fixture_name,
                                              const std::vector<Multicurve>& vertices) {
  SeparatingPartition out;
  for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
    (is_separating(vertices[v]) ? out.separating : out.nonseparating).push_back(v);
  }
  if (vertices.empty()) return out;
  const auto& gens = builtin_generators(fixture_name);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
      bool before = std::binary_search(out.separating.begin(), out.separating.end(), v);
      Multicurve img = apply(gens[g], vertices[v]);
      ++out.images_checked;
      if (is_separating(img) != before) {
        out.violations.push_back("generator " + std::to_string(g) + " changes the class of vertex " +
                                 std::to_string(v));
      }
    }
  }
  return out;
}

Json slice_to_json(const CurveComplexSlice& slice) {
  Json doc;
  doc["vertices"] = Json::array();
  for (const auto& v : slice.vertices()) doc["vertices"].push_back(weights_to_json(v.weights()));
  doc["maximal_simplices"] = slice.maximal_simplices();
  return doc;
}

std::string slice_to_dot(const CurveComplexSlice& slice) {
  std::ostringstream out;
  out << "graph disjointness {\n";
  for (int v = 0; v < slice.size(); ++v) {
    out << "  v" << v << " [label=\"" << format_weights(slice.vertices()[v].weights()) << "\"];\n";
  }
  for (int a = 0; a < slice.size(); ++a)
    for (int b : slice.neighbors(a))
      if (b > a) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace lamistrat
