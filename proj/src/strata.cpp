#include "lamistrat/strata.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lamistrat/enumerate.hpp"
#include "lamistrat/error.hpp"

namespace lamistrat {

Support::Support(Frame frame, std::vector<Multicurve> components, bool allow_empty)
    : frame_(std::move(frame)), components_(std::move(components)) {
  if (!frame_) throw Error(ErrorKind::InvalidInput, "missing triangulation");
  if (components_.empty() && !allow_empty) throw Error(ErrorKind::InvalidInput, "support needs a component");
  for (const auto& c : components_) {
    if (!same_frame(c.frame(), frame_)) throw Error(ErrorKind::FrameMismatch, "component in another frame");
    if (c.empty() || !is_connected(c)) throw Error(ErrorKind::NotConnected, "support components must be connected");
  }
  std::sort(components_.begin(), components_.end());
  if (std::adjacent_find(components_.begin(), components_.end()) != components_.end()) {
    throw Error(ErrorKind::InvalidInput, "support components must be pairwise non-isotopic");
  }
  if (size() > frame_->signature().complexity()) {
    throw Error(ErrorKind::InvalidInput, "more components than 3g-3+n");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (std::size_t j = i + 1; j < components_.size(); ++j) {
      if (!is_disjoint(components_[i], components_[j])) {
        throw Error(ErrorKind::NonDisjointComponents, "support components intersect");
      }
    }
  }
}

Support::Support(Frame frame, std::vector<Multicurve> components, Trusted)
    : frame_(std::move(frame)), components_(std::move(components)) {
  std::sort(components_.begin(), components_.end());
}

Support Support::of_multicurve(const Multicurve& m) {
  std::vector<Multicurve> parts;
  for (auto& c : decompose(m)) parts.push_back(c.curve);
  return Support(m.frame(), std::move(parts), Trusted{});
}

Multicurve Support::as_multicurve() const {
  WeightVector sum(frame_->edge_count(), 0);
  for (const auto& c : components_) sum = add(sum, c.weights());
  return unchecked_multicurve(NormalCoords(frame_, std::move(sum)));
}

bool operator<(const Support& a, const Support& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.components_ < b.components_;
}

Support support_of(const RationalLamination& lam) {
  if (lam.empty()) throw Error(ErrorKind::EmptyLamination, "the empty lamination has no projective class");
  std::vector<Multicurve> parts;
  for (const auto& wc : lam.components()) parts.push_back(wc.curve);
  return Support(lam.frame(), std::move(parts), false);
}

int depth(const Support& s) { return s.size() - 1; }

bool leq(const Support& s, const Support& t) {
  if (!same_frame(s.frame(), t.frame())) throw Error(ErrorKind::FrameMismatch, "supports in different frames");
  return std::includes(t.components().begin(), t.components().end(), s.components().begin(),
                       s.components().end());
}

// ---------------------------------------------------------------------------
// Generic stratified sets

GenericStratifiedSet::GenericStratifiedSet(int size, std::vector<std::pair<int, int>> relation)
    : size_(size), relation_(std::move(relation)), lower_(size) {
  for (auto [lo, hi] : relation_) {
    if (lo < 0 || lo >= size_ || hi < 0 || hi >= size_) {
      throw Error(ErrorKind::InvalidInput, "relation index out of range");
    }
    lower_[hi].push_back(lo);
  }
  for (auto& l : lower_) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
}

namespace {

std::vector<int> all_depths(const GenericStratifiedSet& g) {
  const int n = g.size();
  std::vector<int> depth(n, -1);
  std::vector<char> state(n, 0);  // 0 new, 1 on stack, 2 done
  for (int root = 0; root < n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& low = g.lower(v);
      if (next < low.size()) {
        int u = low[next++];
        if (state[u] == 1) throw Error(ErrorKind::CycleDetected, "order relation has a cycle");
        if (state[u] == 0) {
          state[u] = 1;
          stack.push_back({u, 0});
        }
        continue;
      }
      int d = 0;
      for (int u : low) d = std::max(d, depth[u] + 1);
      depth[v] = d;
      state[v] = 2;
      stack.pop_back();
    }
  }
  return depth;
}

// Reachability sets (strictly below), as sorted vectors.
std::vector<std::vector<int>> strict_down_sets(const GenericStratifiedSet& g) {
  const int n = g.size();
  all_depths(g);  // rejects cycles
  std::vector<std::vector<int>> down(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  auto depths = all_depths(g);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return depths[a] < depths[b]; });
  for (int v : order) {
    std::set<int> acc;
    for (int u : g.lower(v)) {
      acc.insert(u);
      acc.insert(down[u].begin(), down[u].end());
    }
    down[v].assign(acc.begin(), acc.end());
  }
  return down;
}

}  // namespace

int generic_depth(const GenericStratifiedSet& g, int index) {
  if (index < 0 || index >= g.size()) throw Error(ErrorKind::InvalidInput, "index out of range");
  return all_depths(g)[index];
}

int generic_depth(const GenericStratifiedSet& g) {
  auto d = all_depths(g);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

bool check_poset_automorphism(const GenericStratifiedSet& g, const std::vector<int>& sigma) {
  const int n = g.size();
  if (static_cast<int>(sigma.size()) != n) throw Error(ErrorKind::NotBijective, "map is not total");
  std::vector<char> hit(n, 0);
  for (int s : sigma) {
    if (s < 0 || s >= n || hit[s]) throw Error(ErrorKind::NotBijective, "map is not a bijection");
    hit[s] = 1;
  }
  auto down = strict_down_sets(g);
  // sigma preserves the order and is a bijection of a finite poset, so it
  // suffices that each down set maps onto the image's down set.
  for (int v = 0; v < n; ++v) {
    std::vector<int> mapped;
    for (int u : down[v]) mapped.push_back(sigma[u]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != down[sigma[v]]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Strata posets

StrataPoset::StrataPoset(Frame frame, const std::vector<Support>& supports, StrataOptions options)
    : frame_(std::move(frame)), include_empty_(options.include_empty) {
  const std::int64_t budget = options.budget >= 0 ? options.budget : enumeration_budget();
  std::set<Support> closed;
  for (const auto& s : supports) {
    if (!same_frame(s.frame(), frame_)) throw Error(ErrorKind::FrameMismatch, "support in another frame");
    if (s.size() == 0) continue;
    const int k = s.size();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<Multicurve> sub;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(s.components()[i]);
      closed.insert(Support(frame_, std::move(sub), Support::Trusted{}));
      if (static_cast<std::int64_t>(closed.size()) > budget) {
        throw Error(ErrorKind::BudgetExceeded, "stratum count exceeded budget " + std::to_string(budget));
      }
    }
  }
  const int offset = include_empty_ ? 1 : 0;
  if (include_empty_) strata_.push_back({Support(frame_, {}, Support::Trusted{}), 0, 0});
  for (const auto& s : closed) strata_.push_back({s, s.size(), s.size() - 1 + offset});
  index();
}

StrataPoset StrataPoset::unclosed(Frame frame, const std::vector<Support>& supports) {
  StrataPoset p;
  p.frame_ = std::move(frame);
  std::vector<Support> sorted = supports;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& s : sorted) p.strata_.push_back({s, s.size(), s.size() - 1});
  p.index();
  return p;
}

void StrataPoset::index() {
  std::set<WeightVector> seen;
  for (const auto& st : strata_)
    for (const auto& c : st.support.components()) seen.insert(c.weights());
  curves_.clear();
  for (const auto& w : seen) curves_.push_back(unchecked_multicurve(NormalCoords(frame_, w)));
  members_.clear();
  for (const auto& st : strata_) {
    std::vector<int> ids;
    for (const auto& c : st.support.components()) ids.push_back(*curve_index(c));
    std::sort(ids.begin(), ids.end());
    members_.push_back(std::move(ids));
  }
}

std::optional<int> StrataPoset::curve_index(const Multicurve& c) const {
  auto it = std::lower_bound(curves_.begin(), curves_.end(), c);
  if (it == curves_.end() || !(*it == c)) return std::nullopt;
  return static_cast<int>(it - curves_.begin());
}

std::optional<int> StrataPoset::index_of_members(const std::vector<int>& ids) const {
  // Strata are sorted by (size, components) and curve ids follow the same
  // lexicographic order, so members_ is sorted too.
  auto cmp = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  auto it = std::lower_bound(members_.begin(), members_.end(), ids, cmp);
  if (it == members_.end() || *it != ids) return std::nullopt;
  return static_cast<int>(it - members_.begin());
}

std::optional<int> StrataPoset::index_of(const Support& s) const {
  std::vector<int> ids;
  for (const auto& c : s.components()) {
    auto id = curve_index(c);
    if (!id) return std::nullopt;
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  return index_of_members(ids);
}

bool StrataPoset::below(int i, int j) const {
  return std::includes(members_[j].begin(), members_[j].end(), members_[i].begin(), members_[i].end());
}

std::vector<std::pair<int, int>> StrataPoset::cover_relation() const {
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t < size(); ++t) {
    const auto& m = members_[t];
    if (m.empty()) continue;
    for (std::size_t drop = 0; drop < m.size(); ++drop) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (i != drop) sub.push_back(m[i]);
      if (auto s = index_of_members(sub)) out.push_back({*s, t});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GenericStratifiedSet StrataPoset::as_generic() const { return GenericStratifiedSet(size(), cover_relation()); }

int StrataPoset::max_depth() const {
  int d = 0;
  for (const auto& s : strata_) d = std::max(d, s.depth);
  return d;
}

StrataPoset enumerate_strata(const Frame& frame, std::int64_t max_total, StrataOptions options) {
  if (max_total < 1) throw Error(ErrorKind::InvalidInput, "weight bound must be at least 1");
  const std::int64_t budget = options.budget >= 0 ? options.budget : enumeration_budget();
  std::set<std::vector<WeightVector>> found;
  for_each_normal_vector(*frame, max_total, [&](std::span<const std::int64_t> w) {
    NormalCoords coords(frame, WeightVector(w.begin(), w.end()));
    std::vector<WeightVector> comps;
    for (auto& rc : decompose_raw(coords)) {
      if (rc.peripheral >= 0) return;
      comps.push_back(std::move(rc.weights));
    }
    found.insert(std::move(comps));
    if (static_cast<std::int64_t>(found.size()) > budget) {
      throw Error(ErrorKind::BudgetExceeded, "stratum count exceeded budget " + std::to_string(budget));
    }
  });
  std::vector<Support> supports;
  for (const auto& comps : found) {
    std::vector<Multicurve> parts;
    for (const auto& w : comps) parts.push_back(unchecked_multicurve(NormalCoords(frame, w)));
    supports.push_back(Support(frame, std::move(parts), Support::Trusted{}));
  }
  options.budget = budget;
  return StrataPoset(frame, supports, options);
}

// ---------------------------------------------------------------------------
// Axiom check

AxiomReport check_stratification_axioms(const StrataPoset& p) {
  AxiomReport report;
  const int n = p.size();
  report.strata = n;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  auto sid = [](int i) { return "stratum " + std::to_string(i); };

  // Distinct strata.
  for (int i = 0; i + 1 < n; ++i) {
    if (p.members(i) == p.members(i + 1)) fail(sid(i) + " duplicates " + sid(i + 1));
  }

  // Downward closure.
  for (int t = 0; t < n; ++t) {
    const auto& m = p.members(t);
    const int k = static_cast<int>(m.size());
    if (k > 20) {
      fail(sid(t) + " has too many components to close");
      continue;
    }
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(m[i]);
      if (!p.index_of_members(sub)) fail("sub-support of " + sid(t) + " missing (downward closure)");
    }
  }

  // Down sets under leq, used for the order axioms.
  std::vector<std::vector<int>> down(n);
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s)
      if (p.below(s, t)) down[t].push_back(s);
  for (int t = 0; t < n; ++t) {
    if (!std::binary_search(down[t].begin(), down[t].end(), t)) fail(sid(t) + " not reflexive");
    for (int s : down[t]) {
      if (s != t && std::binary_search(down[s].begin(), down[s].end(), t)) {
        fail(sid(s) + " and " + sid(t) + " violate antisymmetry");
      }
      if (!std::includes(down[t].begin(), down[t].end(), down[s].begin(), down[s].end())) {
        fail(sid(s) + " below " + sid(t) + " violates transitivity");
      }
    }
  }

  // Frontier condition. Sample points of cone(s): unit weights and weights
  // 1..k. A point lies in the closure of cone(t) iff every traced component of
  // its coordinates is a component of t.
  const auto& frame = p.frame();
  std::vector<std::vector<std::optional<int>>> sample_parts(n);
  std::vector<char> samples_agree(n, 1);
  for (int s = 0; s < n; ++s) {
    const auto& comps = p.stratum(s).support.components();
    for (int variant = 0; variant < 2; ++variant) {
      WeightVector sum(frame->edge_count(), 0);
      for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t e = 0; e < sum.size(); ++e) {
          sum[e] += comps[i].weights()[e] * (variant == 0 ? 1 : static_cast<int>(i + 1));
        }
      }
      std::vector<std::optional<int>> ids;
      for (const auto& rc : decompose_raw(NormalCoords(frame, sum))) {
        ids.push_back(rc.peripheral >= 0 ? std::nullopt
                                         : p.curve_index(unchecked_multicurve(NormalCoords(frame, rc.weights))));
      }
      if (variant == 0) {
        sample_parts[s] = ids;
      } else {
        samples_agree[s] = ids == sample_parts[s];
      }
    }
    if (!samples_agree[s]) fail(sid(s) + " cone samples have different supports");
  }
  auto in_closure = [&](int s, int t) {
    const auto& m = p.members(t);
    for (const auto& id : sample_parts[s]) {
      if (!id || !std::binary_search(m.begin(), m.end(), *id)) return false;
    }
    return true;
  };
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      ++report.pairs_checked;
      const bool meets = in_closure(s, t);
      const bool contained = meets && samples_agree[s];
      if (meets != contained) fail(sid(s) + " meets but is not contained in closure of " + sid(t));
      if (contained != p.below(s, t)) fail("order disagrees with closure for " + sid(s) + ", " + sid(t));
      if (!p.below(s, t) && !p.below(t, s)) {
        std::vector<int> common;
        std::set_intersection(p.members(s).begin(), p.members(s).end(), p.members(t).begin(),
                              p.members(t).end(), std::back_inserter(common));
        if (!common.empty() && !p.index_of_members(common)) {
          fail(sid(s) + " and " + sid(t) + " share components with no common lower stratum");
        }
      }
    }
  }
  return report;
}

Dimensions dim_formulas(int genus, int punctures, std::optional<MinimalParams> minimal) {
  Dimensions d;
  d.ml = 6 * genus - 6 + 2 * punctures;
  d.pml = d.ml - 1;
  d.u_curve = 6 * genus - 8 + 2 * punctures;
  if (minimal) {
    int v = 6 * minimal->g_tilde - 12 + 2 * minimal->n_tilde + 3 * minimal->boundary;
    d.u_minimal = v;
    d.u_minimal_degenerate = v < 0;
    d.u_minimal_below_u_curve = v < d.u_curve;
  }
  return d;
}

}  // namespace lamistrat
