#include "lamistrat/mapping_class.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

#include "lamistrat/enumerate.hpp"
#include "lamistrat/error.hpp"
#include "lamistrat/fixtures.hpp"

namespace lamistrat {

MappingClass::MappingClass(Frame frame, std::vector<Move> moves)
    : frame_(std::move(frame)), moves_(std::move(moves)) {
  if (!frame_) throw Error(ErrorKind::InvalidInput, "missing triangulation");
  Triangulation cur = *frame_;
  for (const auto& mv : moves_) {
    Step step;
    if (const auto* f = std::get_if<FlipMove>(&mv)) {
      if (f->edge < 0 || f->edge >= cur.edge_count()) {
        throw Error(ErrorKind::InvalidInput, "flip edge " + std::to_string(f->edge) + " out of range");
      }
      if (!is_flippable(cur, f->edge)) {
        throw Error(ErrorKind::NotFlippable, "edge " + std::to_string(f->edge) + " cannot be flipped here");
      }
      auto [next, rec] = flip(cur, f->edge);
      step.record = rec;
      cur = std::move(next);
    } else {
      const auto& r = std::get<RelabelMove>(mv);
      cur = relabel(cur, r.perm, r.reverse);
      step.is_flip = false;
      step.perm = r.perm;
      reversing_ = reversing_ != r.reverse;
    }
    steps_.push_back(std::move(step));
  }
  if (!cur.same_as(*frame_)) throw Error(ErrorKind::NotClosed, "word does not return to its triangulation");
}

std::size_t MappingClass::flip_count() const {
  return std::count_if(steps_.begin(), steps_.end(), [](const Step& s) { return s.is_flip; });
}

WeightVector MappingClass::act(const WeightVector& w) const {
  WeightVector cur = w;
  for (const auto& step : steps_) {
    if (step.is_flip) {
      cur = flip_weights(cur, step.record);
    } else {
      WeightVector next(cur.size());
      for (std::size_t e = 0; e < cur.size(); ++e) next[step.perm[e]] = std::move(cur[e]);
      cur = std::move(next);
    }
  }
  return cur;
}

NormalCoords apply(const MappingClass& f, const NormalCoords& m, std::optional<Weight> cap) {
  if (!same_frame(f.frame(), m.frame())) throw Error(ErrorKind::FrameMismatch, "mapping class acts on another frame");
  WeightVector out = f.act(m.weights());
  if (cap) {
    for (const auto& w : out) {
      if (w > *cap) throw Error(ErrorKind::WeightCapExceeded, "image weight exceeds cap");
    }
  }
  return NormalCoords(m.frame(), std::move(out));
}

Multicurve apply(const MappingClass& f, const Multicurve& m, std::optional<Weight> cap) {
  return unchecked_multicurve(apply(f, m.coords(), cap));
}

MappingClass compose(const MappingClass& f, const MappingClass& g) {
  if (!same_frame(f.frame(), g.frame())) throw Error(ErrorKind::FrameMismatch, "mapping classes on different frames");
  std::vector<Move> moves = f.moves();
  moves.insert(moves.end(), g.moves().begin(), g.moves().end());
  return MappingClass(f.frame(), std::move(moves));
}

MappingClass invert(const MappingClass& f) {
  std::vector<Move> moves;
  for (auto it = f.moves().rbegin(); it != f.moves().rend(); ++it) {
    if (const auto* r = std::get_if<RelabelMove>(&*it)) {
      std::vector<int> inv(r->perm.size());
      for (std::size_t e = 0; e < r->perm.size(); ++e) inv[r->perm[e]] = static_cast<int>(e);
      moves.push_back(RelabelMove{std::move(inv), r->reverse});
    } else {
      moves.push_back(*it);  // flipping the new diagonal undoes a flip
    }
  }
  return MappingClass(f.frame(), std::move(moves));
}

MappingClass power(const MappingClass& f, int k) {
  const MappingClass base = k < 0 ? invert(f) : f;
  std::vector<Move> moves;
  for (int i = 0; i < std::abs(k); ++i) moves.insert(moves.end(), base.moves().begin(), base.moves().end());
  return MappingClass(f.frame(), std::move(moves));
}

// ---------------------------------------------------------------------------
// Twists

namespace {

Weight max_weight(const WeightVector& w) { return *std::max_element(w.begin(), w.end()); }

struct Shortened {
  Triangulation tri;
  WeightVector weights;
  std::vector<int> word;
};

// Breadth-first search for a flip word that strictly lowers the total weight.
std::optional<std::vector<int>> search_shorter(const Triangulation& start, const WeightVector& w, int depth,
                                               std::int64_t max_states) {
  struct Node {
    Triangulation tri;
    WeightVector w;
    std::vector<int> word;
  };
  const Weight base = total(w);
  std::deque<Node> queue{{start, w, {}}};
  std::set<std::vector<int>> seen{canonical_key(start)};
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(node.word.size()) >= depth) continue;
    for (int e = 0; e < node.tri.edge_count(); ++e) {
      if (!is_flippable(node.tri, e)) continue;
      auto [next, rec] = flip(node.tri, e);
      WeightVector nw = flip_weights(node.w, rec);
      std::vector<int> word = node.word;
      word.push_back(e);
      if (total(nw) < base) return word;
      if (!seen.insert(canonical_key(next)).second) continue;
      if (static_cast<std::int64_t>(seen.size()) > max_states) return std::nullopt;
      queue.push_back({std::move(next), std::move(nw), std::move(word)});
    }
  }
  return std::nullopt;
}

// Greedy flips (largest strict decrease, least edge first) until every
// weight is at most 1, so the curve runs through a corridor of triangles, or
// until no short flip word lowers the total any further.
Shortened shorten(const Triangulation& start, const WeightVector& w0, const TwistOptions& opt) {
  Shortened s{start, w0, {}};
  while (max_weight(s.weights) > 1) {
    int best = -1;
    Weight best_gain = 0;
    for (int e = 0; e < s.tri.edge_count(); ++e) {
      if (s.weights[e] == 0 || !is_flippable(s.tri, e)) continue;
      Weight gain = s.weights[e] - flip_weights(s.weights, flip_record(s.tri, e))[e];
      if (gain > best_gain) {
        best_gain = gain;
        best = e;
      }
    }
    std::vector<int> steps;
    if (best >= 0) {
      steps.push_back(best);
    } else {
      auto found = search_shorter(s.tri, s.weights, opt.shorten_search_depth, opt.max_search_states);
      if (!found) break;  // local minimum, e.g. a curve with no puncture on one side
      steps = *found;
    }
    for (int e : steps) {
      auto [next, rec] = flip(s.tri, e);
      s.weights = flip_weights(s.weights, rec);
      s.tri = std::move(next);
      s.word.push_back(e);
    }
  }
  return s;
}

// Probe curves in the short frame, including some meeting the core.
std::vector<Multicurve> twist_probes(const Frame& frame, const Multicurve& core) {
  std::vector<Multicurve> probes;
  for (std::int64_t K = 4; K <= 16; K += 2) {
    probes = enumerate_curves(frame, K);
    int meeting = 0;
    for (const auto& p : probes)
      if (intersection_number(core, p) > 0) ++meeting;
    if (meeting >= 3 && probes.size() >= 8) break;
  }
  return probes;
}

bool is_twist_about(const MappingClass& f, const Multicurve& core, const std::vector<Multicurve>& probes) {
  if (!(apply(f, core) == core)) return false;
  bool moved = false;
  for (const auto& p : probes) {
    Multicurve img = apply(f, p);
    Weight i = intersection_number(core, p);
    if (i == 0) {
      if (!(img == p)) return false;
      continue;
    }
    moved = true;
    if (intersection_number(img, p) != i * i) return false;
  }
  return moved;
}

// Shortens c, then searches flip words on the crossed edges that come back
// to the short triangulation up to a relabeling fixing every other edge.
std::optional<MappingClass> corridor_twist(const Multicurve& c, const TwistOptions& opt) {
  const Frame& frame = c.frame();
  Shortened s = shorten(*frame, c.weights(), opt);
  Frame short_frame = make_frame(s.tri);
  Multicurve core = unchecked_multicurve(NormalCoords(short_frame, s.weights));
  const auto probes = twist_probes(short_frame, core);

  std::vector<int> crossed, fixed;
  for (int e = 0; e < frame->edge_count(); ++e) (s.weights[e] > 0 ? crossed : fixed).push_back(e);

  // Breadth-first over flips of crossed edges until the triangulation comes
  // back up to a relabeling that fixes the rest of the surface.
  struct Node {
    Triangulation tri;
    int parent;
    int edge;
  };
  std::vector<Node> nodes{{s.tri, -1, -1}};
  std::set<std::vector<int>> seen{canonical_key(s.tri)};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (int e : crossed) {
      if (!is_flippable(nodes[head].tri, e)) continue;
      Triangulation next = flip(nodes[head].tri, e).first;
      if (!seen.insert(canonical_key(next)).second) {
        if (!next.same_as(s.tri)) continue;
      }
      std::vector<int> word{e};
      for (int n = static_cast<int>(head); nodes[n].parent >= 0; n = nodes[n].parent) word.push_back(nodes[n].edge);
      std::reverse(word.begin(), word.end());
      for (const auto& perm : find_isomorphisms(next, s.tri, false, fixed)) {
        std::vector<Move> moves;
        for (int w : word) moves.push_back(FlipMove{w});
        moves.push_back(RelabelMove{perm, false});
        MappingClass candidate(short_frame, moves);
        if (!is_twist_about(candidate, core, probes)) continue;
        std::vector<Move> full;
        for (int w : s.word) full.push_back(FlipMove{w});
        full.insert(full.end(), moves.begin(), moves.end());
        for (auto it = s.word.rbegin(); it != s.word.rend(); ++it) full.push_back(FlipMove{*it});
        return MappingClass(frame, std::move(full));
      }
      if (next.same_as(s.tri)) continue;
      nodes.push_back({std::move(next), static_cast<int>(head), e});
      if (static_cast<std::int64_t>(nodes.size()) > opt.max_search_states) {
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

// A curve with no puncture on one side cannot be made short. When that side
// is a one-holed torus, (T_a T_b)^6 twists about its boundary for any a, b
// in it meeting once.
std::optional<MappingClass> chain_twist(const Multicurve& c, const TwistOptions& opt) {
  const Frame& frame = c.frame();
  const auto probes = twist_probes(frame, c);
  const std::int64_t limit = static_cast<std::int64_t>(total(c.weights())) + 8;
  std::vector<Multicurve> inside;
  for (const auto& a : enumerate_curves(frame, limit)) {
    if (!(a == c) && intersection_number(a, c) == 0) inside.push_back(a);
  }
  int tried = 0;
  for (std::size_t i = 0; i < inside.size(); ++i) {
    for (std::size_t j = i + 1; j < inside.size(); ++j) {
      if (intersection_number(inside[i], inside[j]) != 1) continue;
      if (++tried > 64) return std::nullopt;
      auto ta = corridor_twist(inside[i], opt);
      auto tb = corridor_twist(inside[j], opt);
      if (!ta || !tb) continue;
      for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
          MappingClass candidate = power(compose(power(*ta, sa), power(*tb, sb)), 6);
          if (is_twist_about(candidate, c, probes)) return candidate;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

MappingClass twist(const Multicurve& c, const TwistOptions& opt) {
  if (c.empty()) throw Error(ErrorKind::EmptyLamination, "cannot twist about the empty curve");
  if (!is_connected(c)) throw Error(ErrorKind::NotConnected, "twist needs a connected curve");
  if (auto t = corridor_twist(c, opt)) return *t;
  if (auto t = chain_twist(c, opt)) return *t;
  throw Error(ErrorKind::NotShortenable, "no twist word found for the curve");
}

MappingClass find_reflection(const Frame& frame, int max_flips) {
  struct Node {
    Triangulation tri;
    std::vector<int> word;
  };
  std::deque<Node> queue{{*frame, {}}};
  std::set<std::vector<int>> seen{canonical_key(*frame)};
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    auto isos = find_isomorphisms(node.tri, *frame, true);
    if (!isos.empty()) {
      std::vector<Move> moves;
      for (int e : node.word) moves.push_back(FlipMove{e});
      moves.push_back(RelabelMove{isos.front(), true});
      return MappingClass(frame, std::move(moves));
    }
    if (static_cast<int>(node.word.size()) >= max_flips) continue;
    for (int e = 0; e < node.tri.edge_count(); ++e) {
      if (!is_flippable(node.tri, e)) continue;
      Triangulation next = flip(node.tri, e).first;
      if (!seen.insert(canonical_key(next)).second) continue;
      auto word = node.word;
      word.push_back(e);
      queue.push_back({std::move(next), std::move(word)});
    }
  }
  throw Error(ErrorKind::NotShortenable, "no orientation-reversing symmetry within the flip bound");
}

const std::vector<MappingClass>& builtin_generators(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, std::vector<MappingClass>> cache;
  const Fixture& fx = fixture(name);
  std::lock_guard lock(mutex);
  auto it = cache.find(fx.name);
  if (it != cache.end()) return it->second;
  std::vector<MappingClass> gens;
  for (const auto& w : fx.named("generators")) gens.push_back(twist(validate(fx.frame, w)));
  gens.push_back(find_reflection(fx.frame));
  return cache.emplace(fx.name, std::move(gens)).first->second;
}

// ---------------------------------------------------------------------------
// Preservation checks

namespace {

struct ImageTable {
  std::vector<std::optional<int>> image_id;  // poset curve id -> image curve id
  std::vector<WeightVector> images;          // distinct image curves
};

}  // namespace

PreservationReport verify_preservation(const MappingClass& f, const StrataPoset& p) {
  if (!same_frame(f.frame(), p.frame())) throw Error(ErrorKind::FrameMismatch, "mapping class acts on another frame");
  return verify_preservation([&f](const WeightVector& w) { return f.act(w); }, p);
}

PreservationReport verify_preservation(const CurveAction& f, const StrataPoset& p) {
  PreservationReport report;
  const Frame& frame = p.frame();
  auto fail = [&](std::string check, int s, std::string detail) {
    report.violations.push_back({std::move(check), s, std::move(detail)});
  };

  // Images of the individual curves.
  ImageTable table;
  std::map<WeightVector, int> image_index;
  std::vector<std::string> curve_problem(p.curves().size());
  for (const auto& c : p.curves()) {
    WeightVector img = f(c.weights());
    std::optional<int> id;
    try {
      auto parts = decompose_raw(NormalCoords(frame, img));
      if (parts.size() != 1 || parts[0].multiplicity != 1) {
        curve_problem[table.image_id.size()] = "connected";
      } else if (parts[0].peripheral >= 0) {
        curve_problem[table.image_id.size()] = "validity";
      } else {
        auto [pos, inserted] = image_index.emplace(img, static_cast<int>(table.images.size()));
        if (inserted) table.images.push_back(img);
        id = pos->second;
      }
    } catch (const Error&) {
      curve_problem[table.image_id.size()] = "validity";
    }
    table.image_id.push_back(id);
  }

  std::map<std::pair<int, int>, bool> disjoint_cache;
  auto images_disjoint = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = disjoint_cache.find(key);
    if (it != disjoint_cache.end()) return it->second;
    bool d = is_disjoint(unchecked_multicurve(NormalCoords(frame, table.images[a])),
                         unchecked_multicurve(NormalCoords(frame, table.images[b])));
    disjoint_cache.emplace(key, d);
    return d;
  };

  const int n = p.size();
  std::vector<std::optional<std::vector<int>>> image_members(n);
  for (int s = 0; s < n; ++s) {
    ++report.strata_checked;
    const auto& mem = p.members(s);
    std::vector<int> ids;
    bool bad = false;
    for (int c : mem) {
      if (!table.image_id[c]) {
        fail(curve_problem[c], s, "image of a component is not an essential connected curve");
        bad = true;
      } else {
        ids.push_back(*table.image_id[c]);
      }
    }
    if (bad) continue;
    std::vector<int> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail("depth", s, "distinct components have the same image");
      continue;
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        if (!images_disjoint(ids[i], ids[j])) fail("disjoint", s, "images of disjoint components intersect");
      }
    }
    if (!mem.empty()) {
      // The image of the sum decomposes into the images of the parts.
      WeightVector sum(frame->edge_count(), 0);
      for (int c : mem) sum = add(sum, p.curves()[c].weights());
      try {
        std::vector<WeightVector> got;
        for (auto& rc : decompose_raw(NormalCoords(frame, f(sum)))) {
          if (rc.peripheral >= 0 || rc.multiplicity != 1) got.push_back({});
          got.push_back(rc.weights);
        }
        std::vector<WeightVector> want;
        for (int id : ids) want.push_back(table.images[id]);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) fail("sum", s, "image of the sum is not the sum of the images");
      } catch (const Error&) {
        fail("sum", s, "image of the sum is not valid");
      }
    }
    image_members[s] = std::move(sorted);
  }

  for (int s = 0; s < n; ++s) {
    if (!image_members[s]) continue;
    for (int t = 0; t < n; ++t) {
      if (!image_members[t]) continue;
      ++report.pairs_checked;
      const auto& a = *image_members[s];
      const auto& b = *image_members[t];
      bool img_leq = std::includes(b.begin(), b.end(), a.begin(), a.end());
      if (img_leq != p.below(s, t)) {
        fail("order", s, "order with stratum " + std::to_string(t) + " not preserved");
      }
    }
  }

  if (report.violations.empty()) {
    if (auto sigma = induced_strata_map(f, p)) {
      report.image_in_window = true;
      std::vector<char> hit(n, 0);
      bool bijective = true;
      for (int v : *sigma) {
        if (v < 0 || hit[v]) bijective = false;
        if (v >= 0) hit[v] = 1;
      }
      if (bijective) {
        report.automorphism_checked = true;
        report.automorphism_ok = check_poset_automorphism(p.as_generic(), *sigma);
      }
    }
  }
  return report;
}

std::optional<std::vector<int>> induced_strata_map(const CurveAction& f, const StrataPoset& p) {
  const Frame& frame = p.frame();
  constexpr int kInvalid = -1;
  std::vector<int> curve_map;
  for (const auto& c : p.curves()) {
    int id = kInvalid;
    try {
      NormalCoords img(frame, f(c.weights()));
      auto found = p.curve_index(unchecked_multicurve(img));
      if (!found) {
        auto parts = decompose_raw(img);
        if (parts.size() == 1 && parts[0].multiplicity == 1 && parts[0].peripheral < 0) return std::nullopt;
      } else {
        id = *found;
      }
    } catch (const Error&) {
    }
    curve_map.push_back(id);
  }
  std::vector<int> sigma;
  for (int s = 0; s < p.size(); ++s) {
    std::vector<int> ids;
    for (int c : p.members(s)) ids.push_back(curve_map[c]);
    if (std::find(ids.begin(), ids.end(), kInvalid) != ids.end()) {
      sigma.push_back(kInvalid);
      continue;
    }
    std::sort(ids.begin(), ids.end());
    auto idx = p.index_of_members(ids);
    sigma.push_back(idx ? *idx : kInvalid);
  }
  return sigma;
}

}  // namespace lamistrat
