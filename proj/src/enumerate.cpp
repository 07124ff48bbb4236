#include "lamistrat/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "lamistrat/error.hpp"

namespace lamistrat {

namespace {

constexpr std::int64_t kDefaultBudget = 5'000'000;

// Edge order that closes triangles as early as possible, plus for each edge
// the triangles whose other two edges are already placed.
struct Plan {
  std::vector<int> order;
  std::vector<std::vector<std::pair<int, int>>> partners;  // (other, other) per closing triangle
};

Plan make_plan(const Triangulation& tri) {
  const int E = tri.edge_count();
  Plan plan;
  std::vector<char> placed(E, 0);
  std::vector<int> rank(E, -1);
  while (static_cast<int>(plan.order.size()) < E) {
    int best = -1, best_score = -1;
    for (int e = 0; e < E; ++e) {
      if (placed[e]) continue;
      int score = 0;
      for (const auto& s : tri.slots(e)) {
        const auto& t = tri.triangle(s.triangle);
        for (const auto& side : t) score += (side.edge != e && placed[side.edge]) ? 1 : 0;
      }
      if (score > best_score) {
        best = e;
        best_score = score;
      }
    }
    placed[best] = 1;
    rank[best] = static_cast<int>(plan.order.size());
    plan.order.push_back(best);
  }
  plan.partners.resize(E);
  for (int e : plan.order) {
    for (const auto& s : tri.slots(e)) {
      const auto& t = tri.triangle(s.triangle);
      int x = t[(s.side + 1) % 3].edge, y = t[(s.side + 2) % 3].edge;
      if (rank[x] < rank[e] && rank[y] < rank[e]) plan.partners[e].push_back({x, y});
    }
  }
  return plan;
}

}  // namespace

std::int64_t enumeration_budget() {
  if (const char* env = std::getenv("LAMISTRAT_BUDGET")) {
    try {
      std::int64_t v = std::stoll(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultBudget;
}

void for_each_normal_vector(const Triangulation& tri, std::int64_t max_total,
                            const std::function<void(std::span<const std::int64_t>)>& visit,
                            std::int64_t budget) {
  if (max_total <= 0) return;
  const Plan plan = make_plan(tri);
  const int E = tri.edge_count();
  std::vector<std::int64_t> w(E, 0);
  std::int64_t produced = 0;

  auto recurse = [&](auto&& self, int depth, std::int64_t used) -> void {
    if (depth == E) {
      if (used == 0) return;
      if (++produced > budget) {
        throw Error(ErrorKind::BudgetExceeded, "enumeration exceeded budget " + std::to_string(budget));
      }
      visit(w);
      return;
    }
    const int e = plan.order[depth];
    std::int64_t lo = 0, hi = max_total - used;
    int parity = -1;
    for (auto [x, y] : plan.partners[e]) {
      lo = std::max(lo, (w[x] > w[y] ? w[x] - w[y] : w[y] - w[x]));
      hi = std::min(hi, w[x] + w[y]);
      int p = static_cast<int>((w[x] + w[y]) % 2);
      if (parity >= 0 && parity != p) return;
      parity = p;
    }
    if (parity >= 0 && (lo % 2) != parity) ++lo;
    const std::int64_t step = parity >= 0 ? 2 : 1;
    for (std::int64_t v = lo; v <= hi; v += step) {
      w[e] = v;
      self(self, depth + 1, used + v);
    }
    w[e] = 0;
  };
  recurse(recurse, 0, 0);
}

std::vector<Multicurve> enumerate_curves(const Frame& frame, std::int64_t max_total, std::int64_t budget) {
  std::set<WeightVector> found;
  for_each_normal_vector(
      *frame, max_total,
      [&](std::span<const std::int64_t> w) {
        NormalCoords coords(frame, WeightVector(w.begin(), w.end()));
        auto parts = decompose_raw(coords);
        if (parts.size() == 1 && parts[0].multiplicity == 1 && parts[0].peripheral < 0) {
          found.insert(coords.weights());
        }
      },
      budget);
  std::vector<Multicurve> out;
  out.reserve(found.size());
  for (const auto& w : found) out.push_back(unchecked_multicurve(NormalCoords(frame, w)));
  return out;
}

}  // namespace lamistrat
