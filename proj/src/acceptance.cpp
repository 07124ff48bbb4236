#include "lamistrat/acceptance.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>

#include "lamistrat/curve_complex.hpp"
#include "lamistrat/cut.hpp"
#include "lamistrat/enumerate.hpp"
#include "lamistrat/error.hpp"
#include "lamistrat/fixtures.hpp"
#include "lamistrat/mapping_class.hpp"
#include "lamistrat/strata.hpp"

namespace lamistrat {

namespace {

constexpr std::size_t kMaxReported = 20;

struct Tally {
  std::int64_t checks = 0;
  std::vector<std::string> failures;
  std::int64_t failed = 0;

  bool expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failed;
      if (failures.size() < kMaxReported) failures.push_back(what);
    }
    return ok;
  }
};

std::string fmt(const WeightVector& w) { return "(" + format_weights(w) + ")"; }

Support support_from(const Frame& frame, const std::vector<WeightVector>& curves) {
  std::vector<Multicurve> parts;
  for (const auto& w : curves) parts.push_back(validate(frame, w));
  return Support(frame, std::move(parts));
}

// Slope p/q on the once-punctured torus fixture: the curve meets the three
// edges |p|, |q| and |p - q| times.
Multicurve slope_curve(const Frame& frame, std::int64_t p, std::int64_t q) {
  return validate(frame, to_weights(std::vector<std::int64_t>{std::llabs(p), std::llabs(q), std::llabs(p - q)}));
}

std::vector<std::pair<std::int64_t, std::int64_t>> slopes(std::int64_t bound) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out{{1, 0}};
  for (std::int64_t q = 1; q <= bound; ++q)
    for (std::int64_t p = -bound; p <= bound; ++p)
      if (std::gcd(p, q) == 1) out.push_back({p, q});
  return out;
}

// ---------------------------------------------------------------------------

void depth_bounds(Tally& t, Json& details) {
  struct Case {
    const char* fixture;
    std::int64_t K;
  };
  for (const Case& c : {Case{"s_1_1", 6}, Case{"s_0_5", 10}, Case{"s_1_2", 8}, Case{"s_2_1", 20}}) {
    const Fixture& fx = fixture(c.fixture);
    const SurfaceSig sig = fx.frame->signature();
    const int xi = sig.complexity();
    const int bound = 3 * sig.genus - 4 + sig.punctures;
    StrataPoset p = enumerate_strata(fx.frame, c.K);
    const std::string where = std::string(c.fixture) + " K=" + std::to_string(c.K);

    t.expect(p.max_depth() == bound, where + ": max depth " + std::to_string(p.max_depth()) + " != " +
                                         std::to_string(bound));
    int top = 0;
    GenericStratifiedSet g = p.as_generic();
    for (int i = 0; i < p.size(); ++i) {
      const Stratum& s = p.stratum(i);
      t.expect(s.depth == s.cone_dim - 1, where + ": stored depth is not k-1");
      t.expect(generic_depth(g, i) == s.cone_dim - 1, where + ": chain depth is not k-1 at stratum " +
                                                          std::to_string(i));
      t.expect(s.cone_dim <= xi, where + ": support with more than 3g-3+n components");
      if (s.depth == bound) {
        ++top;
        t.expect(s.cone_dim == xi, where + ": maximal depth attained by a non-maximal support");
      }
    }
    t.expect(top > 0, where + ": maximal depth not attained");
    auto pants_index = p.index_of(support_from(fx.frame, fx.named("pants")));
    t.expect(pants_index.has_value(), where + ": fixture pants decomposition missing from window");
    if (pants_index) {
      t.expect(p.stratum(*pants_index).depth == bound, where + ": pants decomposition depth");
    }
    details[c.fixture] = Json{{"K", c.K}, {"strata", p.size()}, {"max_depth", p.max_depth()},
                             {"expected", bound}, {"maximal_supports", top}};
  }
}

void slope_oracle(Tally& t, Json& details) {
  const Frame& frame = fixture("s_1_1").frame;
  auto all = slopes(8);
  std::vector<Multicurve> curves;
  for (auto [p, q] : all) curves.push_back(slope_curve(frame, p, q));
  std::int64_t pairs = 0;
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = 0; b < all.size(); ++b) {
      auto [p, q] = all[a];
      auto [r, s] = all[b];
      const std::int64_t det = std::llabs(p * s - q * r);
      Weight i = intersection_number(curves[a], curves[b]);
      ++pairs;
      t.expect(i == det, "i(" + std::to_string(p) + "/" + std::to_string(q) + ", " + std::to_string(r) + "/" +
                             std::to_string(s) + ") = " + i.str() + ", expected " + std::to_string(det));
    }
  }
  // Twisting about slope 0/1 moves 1/0 to 1/(+-k), at determinant k from 1/0.
  const MappingClass& T = builtin_generators("s_1_1").front();
  Multicurve beta = slope_curve(frame, 1, 0);
  Multicurve img = beta;
  for (int k = 1; k <= 5; ++k) {
    img = apply(T, img);
    t.expect(intersection_number(img, beta) == k, "twist power " + std::to_string(k) + " breaks slope arithmetic");
    t.expect(img == slope_curve(frame, 1, k) || img == slope_curve(frame, 1, -k),
             "twist power " + std::to_string(k) + " is not slope 1/(+-k)");
  }
  details = Json{{"slopes", all.size()}, {"pairs", pairs}};
}

void flip_soundness(Tally& t, Json& details, const AcceptanceOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  for (const auto& name : fixture_names()) {
    const Fixture& fx = fixture(name);
    const Frame& frame = fx.frame;
    auto base = enumerate_curves(frame, 8);
    std::vector<WeightVector> links;
    for (int v = 0; v < frame->vertex_count(); ++v) links.push_back(vertex_link(*frame, v));
    std::vector<int> flippable;
    for (int e = 0; e < frame->edge_count(); ++e)
      if (is_flippable(*frame, e)) flippable.push_back(e);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

    for (int sample = 0; sample < opt.samples; ++sample) {
      WeightVector w(frame->edge_count(), 0);
      const int parts = 1 + static_cast<int>(pick(3));
      for (int k = 0; k < parts; ++k) {
        const auto& c = base[pick(base.size())].weights();
        const int mult = 1 + static_cast<int>(pick(3));
        for (std::size_t e = 0; e < w.size(); ++e) w[e] += c[e] * mult;
      }
      if (pick(4) == 0) w = add(w, links[pick(links.size())]);
      NormalCoords m(frame, w);
      const int e = flippable[pick(flippable.size())];
      const std::string where = name + " sample " + std::to_string(sample) + " edge " + std::to_string(e);

      NormalCoords once = transport_flip(m, e);
      NormalCoords twice = transport_flip(once, e);
      t.expect(twice.weights() == m.weights() && twice.triangulation().same_as(*frame),
               where + ": flipping twice is not the identity");

      auto before = decompose_raw(m);
      auto after = decompose_raw(once);
      auto shape = [](const std::vector<RawComponent>& parts) {
        std::vector<std::pair<std::int64_t, bool>> out;
        for (const auto& rc : parts) out.push_back({rc.multiplicity, rc.peripheral >= 0});
        std::sort(out.begin(), out.end());
        return out;
      };
      t.expect(shape(before) == shape(after), where + ": component structure changed");

      StripResult essential = strip_peripheral(frame, w);
      const Multicurve& probe = base[pick(base.size())];
      Multicurve a1 = unchecked_multicurve(transport_flip(essential.curve.coords(), e));
      Multicurve b1 = unchecked_multicurve(NormalCoords(a1.frame(), flip_weights(probe.weights(),
                                                                                 flip_record(*frame, e))));
      t.expect(intersection_number(essential.curve, probe) == intersection_number(a1, b1),
               where + ": intersection number with probe changed");
    }
    details[name] = Json{{"samples", opt.samples}, {"base_curves", base.size()}};
  }
}

void preservation(Tally& t, Json& details) {
  struct Case {
    const char* fixture;
    std::int64_t K;
    std::int64_t pair_K;
  };
  for (const Case& c : {Case{"s_0_5", 12, 10}, Case{"s_1_2", 10, 8}, Case{"s_1_1", 8, 6}, Case{"s_2_1", 12, 8}}) {
    const Fixture& fx = fixture(c.fixture);
    StrataPoset p = enumerate_strata(fx.frame, c.K);
    auto curves = enumerate_curves(fx.frame, c.pair_K);
    const auto& gens = builtin_generators(c.fixture);
    Json per = Json::array();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::string where = std::string(c.fixture) + " generator " + std::to_string(g);
      PreservationReport r = verify_preservation(gens[g], p);
      t.expect(r.ok(), where + ": " + std::to_string(r.violations.size()) + " preservation violations" +
                           (r.violations.empty() ? "" : " (" + r.violations.front().check + ")"));
      t.checks += r.strata_checked + r.pairs_checked;

      // Intersection numbers, vertex links and the inverse.
      MappingClass inv = invert(gens[g]);
      std::vector<Multicurve> imgs;
      for (const auto& a : curves) {
        imgs.push_back(apply(gens[g], a));
        t.expect(apply(inv, imgs.back()) == a, where + ": inverse does not undo " + fmt(a.weights()));
      }
      for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i; j < curves.size(); ++j)
          t.expect(intersection_number(curves[i], curves[j]) == intersection_number(imgs[i], imgs[j]),
                   where + ": intersection of " + fmt(curves[i].weights()) + ", " + fmt(curves[j].weights()));
      for (int v = 0; v < fx.frame->vertex_count(); ++v) {
        auto parts = decompose_raw(apply(gens[g], NormalCoords(fx.frame, vertex_link(*fx.frame, v))));
        t.expect(parts.size() == 1 && parts[0].peripheral >= 0 && parts[0].multiplicity == 1,
                 where + ": vertex link not mapped to a vertex link");
      }
      per.push_back(Json{{"flips", gens[g].flip_count()},
                         {"orientation_reversing", gens[g].orientation_reversing()},
                         {"violations", r.violations.size()},
                         {"automorphism_checked", r.automorphism_checked}});
    }
    details[c.fixture] = Json{{"K", c.K}, {"strata", p.size()}, {"generators", per}};
  }
}

void curve_complex_reduction(Tally& t, Json& details) {
  struct Case {
    const char* fixture;
    std::int64_t K;
  };
  for (const Case& c : {Case{"s_1_1", 6}, Case{"s_0_5", 10}, Case{"s_1_2", 8}, Case{"s_2_1", 8}}) {
    const Fixture& fx = fixture(c.fixture);
    const int xi = fx.frame->signature().complexity();
    CurveComplexSlice slice(enumerate_vertices(c.fixture, c.K));
    const std::string where = std::string(c.fixture) + " K=" + std::to_string(c.K);

    std::vector<int> pants_ids;
    for (const auto& w : fx.named("pants")) {
      auto id = slice.index_of(validate(fx.frame, w));
      if (t.expect(id.has_value(), where + ": pants curve " + fmt(w) + " not in window")) pants_ids.push_back(*id);
    }
    t.expect(slice.is_simplex(pants_ids), where + ": pants decomposition is not a simplex");
    t.expect(slice.max_simplex_size() == xi, where + ": maximal simplex size " +
                                                 std::to_string(slice.max_simplex_size()) + " != " +
                                                 std::to_string(xi));

    // Simplices and strata with the same component sets.
    std::vector<Support> supports;
    for (const auto& m : slice.maximal_simplices()) {
      std::vector<Multicurve> parts;
      for (int v : m) parts.push_back(slice.vertices()[v]);
      supports.push_back(Support(fx.frame, std::move(parts)));
    }
    StrataPoset poset(fx.frame, supports);
    auto counts = slice.simplex_counts();
    const std::int64_t simplices = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
    t.expect(simplices == poset.size(), where + ": simplices and strata do not biject");
    for (int i = 0; i < poset.size(); ++i) {
      std::vector<int> ids;
      for (const auto& comp : poset.stratum(i).support.components()) ids.push_back(*slice.index_of(comp));
      t.expect(slice.is_simplex(ids) && static_cast<int>(ids.size()) == poset.stratum(i).depth + 1,
               where + ": stratum " + std::to_string(i) + " is not a simplex of matching size");
    }

    Json per = Json::array();
    for (const auto& g : builtin_generators(c.fixture)) {
      Weight widest = 0;
      for (const auto& v : slice.vertices()) widest = std::max(widest, total(g.act(v.weights())));
      const auto K2 = static_cast<std::int64_t>(widest);
      auto window = enumerate_vertices(c.fixture, K2);
      InducedMap m = induced_map(g, slice, K2, &window);
      t.expect(m.ok(), where + ": induced map not simplicial/injective" +
                           (m.violations.empty() ? "" : ": " + m.violations.front()));
      t.expect(m.outside_window.empty(), where + ": image outside the K' window");
      bool located = std::all_of(m.target.begin(), m.target.end(), [](const auto& x) { return x.has_value(); });
      t.expect(located, where + ": image not found among enumerated K' vertices");
      per.push_back(Json{{"K_prime", K2}, {"window_vertices", window.size()}});
    }
    details[c.fixture] = Json{{"K", c.K}, {"vertices", slice.size()}, {"edges", slice.edge_count()},
                             {"max_simplex", slice.max_simplex_size()}, {"generators", per}};
  }
}

void separating_step(Tally& t, Json& details) {
  const Fixture& fx = fixture("s_1_2");
  auto vertices = enumerate_vertices("s_1_2", 10);
  SeparatingPartition part = separating_classification("s_1_2", vertices);
  t.checks += part.images_checked;
  t.expect(part.violations.empty(), "s_1_2: a generator changes the separating class" +
                                        (part.violations.empty() ? "" : ": " + part.violations.front()));
  Multicurve sep = validate(fx.frame, fx.named("separating").front());
  auto pos = std::lower_bound(vertices.begin(), vertices.end(), sep);
  t.expect(pos != vertices.end() && *pos == sep, "fixture separating curve not in window");
  if (pos != vertices.end() && *pos == sep) {
    const int id = static_cast<int>(pos - vertices.begin());
    t.expect(std::binary_search(part.separating.begin(), part.separating.end(), id),
             "fixture separating curve classified nonseparating");
  }
  CutInvariants cut = cut_invariants(sep);
  const std::vector<Region> expected{{1, 0, 1}, {0, 2, 1}};
  t.expect(cut.separating && cut.regions == expected, "cut invariants of the separating curve");

  // Parity oracle: separating iff every homology probe meets it evenly.
  std::vector<Multicurve> probes;
  for (const auto& w : fx.named("homology_probes")) probes.push_back(validate(fx.frame, w));
  for (const auto& c : vertices) {
    bool even = std::all_of(probes.begin(), probes.end(),
                            [&](const Multicurve& b) { return intersection_number(c, b) % 2 == 0; });
    t.expect(even == is_separating(c), "parity oracle disagrees on " + fmt(c.weights()));
  }
  Json regions = Json::array();
  for (const auto& r : cut.regions) regions.push_back(Json::array({r.genus, r.punctures, r.boundary}));
  details = Json{{"vertices", vertices.size()},
                 {"separating", part.separating.size()},
                 {"nonseparating", part.nonseparating.size()},
                 {"cut", regions}};
}

void two_algorithms(Tally& t, Json& details) {
  struct Case {
    const char* fixture;
    std::int64_t K;
  };
  for (const Case& c : {Case{"s_1_1", 10}, Case{"s_0_5", 12}, Case{"s_1_2", 12}, Case{"s_2_1", 10}}) {
    auto curves = enumerate_curves(fixture(c.fixture).frame, c.K);
    std::int64_t pairs = 0, disjoint = 0;
    for (std::size_t a = 0; a < curves.size(); ++a) {
      for (std::size_t b = a; b < curves.size(); ++b) {
        const bool d = is_disjoint(curves[a], curves[b]);
        const bool zero = intersection_number(curves[a], curves[b]) == 0;
        ++pairs;
        disjoint += d ? 1 : 0;
        t.expect(d == zero, std::string(c.fixture) + ": disjointness disagrees on " + fmt(curves[a].weights()) +
                                ", " + fmt(curves[b].weights()));
      }
    }
    details[c.fixture] = Json{{"K", c.K}, {"pairs", pairs}, {"disjoint_pairs", disjoint}};
  }

  // Twist growth: differences of k -> i(T^k b, e) settle at i(c,b) i(c,e).
  int triples = 0;
  for (const auto& name : fixture_names()) {
    const Fixture& fx = fixture(name);
    const auto& gens = builtin_generators(name);
    const auto& cores = fx.named("generators");
    auto curves = enumerate_curves(fx.frame, 6);
    int taken = 0;
    for (std::size_t g = 0; g < cores.size() && taken < 16; ++g) {
      Multicurve c = validate(fx.frame, cores[g]);
      for (std::size_t a = 0; a < curves.size() && taken < 16; ++a) {
        for (std::size_t b = 0; b < curves.size() && taken < 16; b += 2) {
          const Weight ib = intersection_number(c, curves[a]);
          const Weight ie = intersection_number(c, curves[b]);
          if (ib == 0 || ie == 0) continue;
          ++taken;
          ++triples;
          std::vector<Weight> seq{intersection_number(curves[a], curves[b])};
          Multicurve img = curves[a];
          bool settled = false;
          for (int k = 1; k <= 16 && !settled; ++k) {
            img = apply(gens[g], img);
            seq.push_back(intersection_number(img, curves[b]));
            const std::size_t n = seq.size();
            if (n >= 4) {
              Weight d1 = seq[n - 1] - seq[n - 2], d2 = seq[n - 2] - seq[n - 3], d3 = seq[n - 3] - seq[n - 4];
              settled = d1 == d2 && d2 == d3;
              if (settled) {
                t.expect(d1 == ib * ie, name + ": growth slope " + d1.str() + " != " + Weight(ib * ie).str());
              }
            }
          }
          t.expect(settled, name + ": twist growth did not settle");
        }
      }
    }
  }
  t.expect(triples >= 50, "fewer than 50 twist-growth triples");
  details["growth_triples"] = triples;
}

void stratification_axioms(Tally& t, Json& details) {
  struct Case {
    const char* fixture;
    std::int64_t K;
    bool with_empty;
  };
  for (const Case& c : {Case{"s_1_1", 8, false}, Case{"s_0_5", 14, false}, Case{"s_1_2", 12, false},
                        Case{"s_2_1", 20, false}, Case{"s_0_5", 10, true}}) {
    StrataOptions opts;
    opts.include_empty = c.with_empty;
    StrataPoset p = enumerate_strata(fixture(c.fixture).frame, c.K, opts);
    const std::string where = std::string(c.fixture) + " K=" + std::to_string(c.K) + (c.with_empty ? " +empty" : "");
    AxiomReport r = check_stratification_axioms(p);
    t.checks += r.pairs_checked;
    t.expect(r.ok(), where + ": " + (r.ok() ? "" : r.violations.front()));
    GenericStratifiedSet g = p.as_generic();
    for (int i = 0; i < p.size(); ++i) {
      const int k = p.stratum(i).cone_dim;
      t.expect(generic_depth(g, i) == (c.with_empty ? k : k - 1), where + ": generic depth at " + std::to_string(i));
    }
    details[where] = Json{{"strata", p.size()}, {"pairs", r.pairs_checked}};
  }

  // Negative controls on the S_0,5 window.
  const Frame& frame = fixture("s_0_5").frame;
  StrataPoset p = enumerate_strata(frame, 12);
  GenericStratifiedSet g = p.as_generic();
  const MappingClass& reflection = builtin_generators("s_0_5").back();
  CurveAction genuine = [&](const WeightVector& w) { return reflection.act(w); };
  auto sigma = induced_strata_map(genuine, p);
  if (t.expect(sigma.has_value(), "reflection does not preserve the window")) {
    t.expect(check_poset_automorphism(g, *sigma), "reflection is not a poset automorphism");
    // Swap the images of a curve and of a two-component support.
    std::vector<int> bad = *sigma;
    int a = -1, b = -1;
    for (int i = 0; i < p.size(); ++i) {
      if (a < 0 && p.stratum(i).cone_dim == 1) a = i;
      if (b < 0 && p.stratum(i).cone_dim == 2) b = i;
    }
    std::swap(bad[a], bad[b]);
    t.expect(!check_poset_automorphism(g, bad), "corrupted index map accepted");
  }
  // Arbitrary permutation of the weights (cyclic shift of edge labels).
  CurveAction corrupted = [](const WeightVector& w) {
    WeightVector out(w.size());
    for (std::size_t e = 0; e < w.size(); ++e) out[(e + 1) % w.size()] = w[e];
    return out;
  };
  PreservationReport bad_report = verify_preservation(corrupted, p);
  t.expect(!bad_report.ok(), "corrupted action passes the preservation checks");
  bool rejected = true;
  if (auto s = induced_strata_map(corrupted, p)) {
    try {
      rejected = !check_poset_automorphism(g, *s);
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::NotBijective;
    }
  }
  t.expect(rejected, "corrupted action induces a poset automorphism");
  details["negative_control"] = Json{{"violations", bad_report.violations.size()}, {"rejected", rejected}};
}

void dimensions(Tally& t, Json& details) {
  // Oracle from the fixture triangulations: E - n edge weights modulo the
  // n vertex-link directions, one fewer projectively, two fewer for the
  // laminations disjoint from a curve.
  for (const char* name : {"s_0_5", "s_1_2", "s_2_1"}) {
    const Frame& frame = fixture(name).frame;
    const SurfaceSig sig = frame->signature();
    const int ml = frame->edge_count() - frame->vertex_count();
    Dimensions d = dim_formulas(sig.genus, sig.punctures);
    const std::string where = "(" + std::to_string(sig.genus) + "," + std::to_string(sig.punctures) + ")";
    t.expect(d.ml == ml, where + ": dim ML " + std::to_string(d.ml) + " != " + std::to_string(ml));
    t.expect(d.pml == ml - 1, where + ": dim PML");
    t.expect(d.u_curve == ml - 2, where + ": dim U_curve");
    details[where] = Json::array({d.ml, d.pml, d.u_curve});
  }
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  static const char* const names[] = {"",
                                      "depth bounds",
                                      "intersection oracle",
                                      "flip soundness",
                                      "preservation under generators",
                                      "curve-complex reduction",
                                      "separating-curve step",
                                      "two-algorithm agreement",
                                      "stratification axioms",
                                      "dimension formulas"};
  CriterionResult r;
  r.id = id;
  if (id < 1 || id > kCriterionCount) {
    r.name = "unknown";
    r.failures.push_back("no such criterion");
    return r;
  }
  r.name = names[id];
  Tally t;
  try {
    switch (id) {
      case 1: depth_bounds(t, r.details); break;
      case 2: slope_oracle(t, r.details); break;
      case 3: flip_soundness(t, r.details, options); break;
      case 4: preservation(t, r.details); break;
      case 5: curve_complex_reduction(t, r.details); break;
      case 6: separating_step(t, r.details); break;
      case 7: two_algorithms(t, r.details); break;
      case 8: stratification_axioms(t, r.details); break;
      case 9: dimensions(t, r.details); break;
    }
  } catch (const Error& e) {
    t.expect(false, std::string(to_string(e.kind())) + ": " + e.what());
  } catch (const std::exception& e) {
    t.expect(false, e.what());
  }
  r.checks = t.checks;
  r.failures = std::move(t.failures);
  r.pass = t.failed == 0 && t.checks > 0;
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

Json criterion_to_json(const CriterionResult& r) {
  return Json{{"id", r.id},         {"name", r.name},         {"pass", r.pass},
              {"checks", r.checks}, {"failures", r.failures}, {"details", r.details}};
}

}  // namespace lamistrat
