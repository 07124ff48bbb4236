#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lamistrat/acceptance.hpp"
#include "lamistrat/curve_complex.hpp"
#include "lamistrat/cut.hpp"
#include "lamistrat/enumerate.hpp"
#include "lamistrat/error.hpp"
#include "lamistrat/fixtures.hpp"
#include "lamistrat/json_io.hpp"
#include "lamistrat/mapping_class.hpp"
#include "lamistrat/strata.hpp"

using namespace lamistrat;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kVerifyFailed = 2, kBudget = 3 };

struct Surface {
  std::string name = "s_1_1";
  std::string file;
  std::optional<Fixture> loaded;

  const Fixture& get() {
    if (file.empty()) return fixture(name);
    if (!loaded) {
      std::ifstream in(file);
      if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + file);
      std::stringstream text;
      text << in.rdbuf();
      loaded = fixture_from_json_text(file, text.str());
    }
    return *loaded;
  }
  bool builtin() const { return file.empty(); }
};

void add_surface(CLI::App* cmd, Surface& s) {
  auto* a = cmd->add_option("--surface", s.name, "built-in surface (see `fixtures`)");
  auto* b = cmd->add_option("--triangulation", s.file, "triangulation JSON file {\"edges\", \"triangles\"[, \"curves\"]}");
  a->excludes(b);
}

std::string read_text_arg(const std::string& value) {
  if (!value.empty() && value.front() == '@') {
    std::ifstream in(value.substr(1));
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + value.substr(1));
    std::stringstream text;
    text << in.rdbuf();
    return text.str();
  }
  return value;
}

// Weights as "1,0,2", "[1,0,2]", or the name of a fixture curve list, whose
// curves are summed.
WeightVector weights_arg(const Fixture& fx, const std::string& value) {
  if (auto it = fx.curves.find(value); it != fx.curves.end()) {
    WeightVector sum(fx.frame->edge_count(), 0);
    for (const auto& w : it->second) sum = add(sum, w);
    return sum;
  }
  return parse_weights(read_text_arg(value));
}

Json parse_json_arg(const std::string& value) {
  try {
    return Json::parse(read_text_arg(value));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("bad JSON: ") + e.what());
  }
}

Json components_json(const Multicurve& m) {
  Json out = Json::array();
  for (const auto& c : decompose(m)) {
    out.push_back(Json{{"weights", weights_to_json(c.curve.weights())}, {"multiplicity", c.multiplicity}});
  }
  return out;
}

void emit(const Json& doc) { std::cout << doc.dump() << "\n"; }

int fail(ErrorKind kind, const std::string& message) {
  Json err{{"error", std::string(to_string(kind))}, {"message", message}};
  std::cerr << err.dump() << "\n";
  return kind == ErrorKind::BudgetExceeded ? kBudget : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strata of measured laminations at rational points"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Surface surface;
  std::string weights, a_arg, b_arg, mapping, format = "json";
  std::int64_t max_total = 8;
  int exponent = 1, generator = -1, criterion = 0;
  bool include_empty = false;
  AcceptanceOptions acc;

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list built-in surfaces");

  auto* validate_cmd = app.add_subcommand("validate", "check a normal coordinate vector");
  add_surface(validate_cmd, surface);
  validate_cmd->add_option("--weights", weights)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "split a multicurve into weighted components");
  add_surface(decompose_cmd, surface);
  decompose_cmd->add_option("--weights", weights)->required();

  auto* intersect_cmd = app.add_subcommand("intersect", "geometric intersection number");
  add_surface(intersect_cmd, surface);
  intersect_cmd->add_option("--a", a_arg)->required();
  intersect_cmd->add_option("--b", b_arg)->required();

  auto* disjoint_cmd = app.add_subcommand("disjoint", "disjointness test");
  add_surface(disjoint_cmd, surface);
  disjoint_cmd->add_option("--a", a_arg)->required();
  disjoint_cmd->add_option("--b", b_arg)->required();

  auto* depth_cmd = app.add_subcommand("depth", "depth of the stratum of a support");
  add_surface(depth_cmd, surface);
  depth_cmd->add_option("--support", weights, "multicurve weights or a fixture curve list")->required();

  auto* cut_cmd = app.add_subcommand("cut", "complementary regions of a curve");
  add_surface(cut_cmd, surface);
  cut_cmd->add_option("--weights", weights)->required();

  auto* curves_cmd = app.add_subcommand("enumerate-curves", "connected essential curves up to total weight K");
  add_surface(curves_cmd, surface);
  curves_cmd->add_option("--max-total,-K", max_total)->required();

  auto* strata_cmd = app.add_subcommand("enumerate-strata", "strata with supports up to total weight K");
  add_surface(strata_cmd, surface);
  strata_cmd->add_option("--max-total,-K", max_total)->required();
  strata_cmd->add_flag("--include-empty", include_empty);

  auto* export_cmd = app.add_subcommand("poset-export", "Hasse diagram of the strata poset");
  add_surface(export_cmd, surface);
  export_cmd->add_option("--max-total,-K", max_total)->required();
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  export_cmd->add_flag("--include-empty", include_empty);

  auto* twist_cmd = app.add_subcommand("twist", "Dehn twist word about a curve");
  add_surface(twist_cmd, surface);
  twist_cmd->add_option("--curve", a_arg)->required();
  twist_cmd->add_option("--power", exponent);
  twist_cmd->add_option("--weights", weights, "also report the image of these weights");

  auto* apply_cmd = app.add_subcommand("apply", "act on weights by a mapping class");
  add_surface(apply_cmd, surface);
  apply_cmd->add_option("--weights", weights)->required();
  auto* map_opt = apply_cmd->add_option("--mapping", mapping, "mapping class JSON, inline or @file");
  auto* gen_opt = apply_cmd->add_option("--generator", generator, "index into the built-in generators");
  map_opt->excludes(gen_opt);
  apply_cmd->add_option("--power", exponent);

  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance criteria");
  verify_cmd->add_option("--criterion", criterion, "run one criterion (1-9)")->check(CLI::Range(0, kCriterionCount));
  verify_cmd->add_option("--seed", acc.seed);
  verify_cmd->add_option("--samples", acc.samples)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(ErrorKind::InvalidInput, e.what());
  }

  try {
    if (fixtures_cmd->parsed()) {
      Json list = Json::array();
      for (const auto& name : fixture_names()) {
        const Fixture& fx = fixture(name);
        const SurfaceSig sig = fx.frame->signature();
        Json curves = Json::object();
        for (const auto& [key, ws] : fx.curves) {
          for (const auto& w : ws) curves[key].push_back(weights_to_json(w));
        }
        list.push_back(Json{{"name", name},
                            {"genus", sig.genus},
                            {"punctures", sig.punctures},
                            {"triangulation", triangulation_to_json(*fx.frame)},
                            {"curves", curves}});
      }
      emit(Json{{"fixtures", list}});
      return kOk;
    }

    if (verify_cmd->parsed()) {
      Json report = Json::array();
      bool all = true;
      std::int64_t checks = 0;
      for (int id = 1; id <= kCriterionCount; ++id) {
        if (criterion != 0 && id != criterion) continue;
        CriterionResult r = run_criterion(id, acc);
        all = all && r.pass;
        checks += r.checks;
        report.push_back(criterion_to_json(r));
      }
      emit(Json{{"seed", acc.seed}, {"samples", acc.samples}, {"pass", all}, {"checks", checks}, {"criteria", report}});
      return all ? kOk : kVerifyFailed;
    }

    const Fixture& fx = surface.get();
    const Frame& frame = fx.frame;

    if (validate_cmd->parsed()) {
      Multicurve m = validate(frame, weights_arg(fx, weights));
      emit(Json{{"valid", true}, {"empty", m.empty()}, {"connected", !m.empty() && is_connected(m)},
                {"components", decompose(m).size()}});
    } else if (decompose_cmd->parsed()) {
      Multicurve m = validate(frame, weights_arg(fx, weights));
      emit(Json{{"components", components_json(m)}});
    } else if (intersect_cmd->parsed() || disjoint_cmd->parsed()) {
      Multicurve a = validate(frame, weights_arg(fx, a_arg));
      Multicurve b = validate(frame, weights_arg(fx, b_arg));
      if (intersect_cmd->parsed()) {
        const Weight i = intersection_number(a, b);
        emit(Json{{"i", weights_to_json(std::span<const Weight>(&i, 1))[0]}});
      } else {
        emit(Json{{"disjoint", is_disjoint(a, b)}});
      }
    } else if (depth_cmd->parsed()) {
      Support s = Support::of_multicurve(validate(frame, weights_arg(fx, weights)));
      Json comps = Json::array();
      for (const auto& c : s.components()) comps.push_back(weights_to_json(c.weights()));
      emit(Json{{"depth", depth(s)}, {"components", comps}});
    } else if (cut_cmd->parsed()) {
      Multicurve c = validate(frame, weights_arg(fx, weights));
      if (!is_connected(c)) throw Error(ErrorKind::NotConnected, "cut expects a single curve");
      CutInvariants inv = cut_invariants(c);
      Json regions = Json::array();
      for (const auto& r : inv.regions) {
        regions.push_back(Json{{"genus", r.genus}, {"punctures", r.punctures}, {"boundary", r.boundary}});
      }
      emit(Json{{"separating", inv.separating}, {"regions", regions}});
    } else if (curves_cmd->parsed()) {
      auto curves = enumerate_curves(frame, max_total);
      Json list = Json::array();
      for (const auto& c : curves) list.push_back(weights_to_json(c.weights()));
      emit(Json{{"max_total", max_total}, {"count", curves.size()}, {"curves", list}});
    } else if (strata_cmd->parsed() || export_cmd->parsed()) {
      StrataOptions opts;
      opts.include_empty = include_empty;
      StrataPoset p = enumerate_strata(frame, max_total, opts);
      if (export_cmd->parsed() && format == "dot") {
        std::cout << poset_to_dot(p);
      } else if (export_cmd->parsed()) {
        emit(poset_to_json(p));
      } else {
        Json doc = poset_to_json(p);
        emit(Json{{"max_total", max_total}, {"count", p.size()}, {"max_depth", p.max_depth()},
                  {"strata", doc["strata"]}});
      }
    } else if (twist_cmd->parsed()) {
      MappingClass t = power(twist(validate(frame, weights_arg(fx, a_arg))), exponent);
      Json doc = mapping_class_to_json(t);
      doc["flips"] = t.flip_count();
      if (!weights.empty()) {
        doc["image"] = weights_to_json(apply(t, validate(frame, weights_arg(fx, weights))).weights());
      }
      emit(doc);
    } else if (apply_cmd->parsed()) {
      std::optional<MappingClass> f;
      if (generator >= 0) {
        if (!surface.builtin()) throw Error(ErrorKind::InvalidInput, "--generator needs a built-in --surface");
        const auto& gens = builtin_generators(fx.name);
        if (generator >= static_cast<int>(gens.size())) {
          throw Error(ErrorKind::InvalidInput, "generator index out of range (have " +
                                                   std::to_string(gens.size()) + ")");
        }
        f = gens[generator];
      } else if (!mapping.empty()) {
        f = mapping_class_from_json(frame, parse_json_arg(mapping));
      } else {
        throw Error(ErrorKind::InvalidInput, "apply needs --mapping or --generator");
      }
      NormalCoords image = apply(power(*f, exponent), NormalCoords(frame, weights_arg(fx, weights)));
      emit(Json{{"image", weights_to_json(image.weights())}});
    }
    return kOk;
  } catch (const Error& e) {
    return fail(e.kind(), e.what());
  } catch (const Json::exception& e) {
    return fail(ErrorKind::InvalidInput, e.what());
  } catch (const std::exception& e) {
    return fail(ErrorKind::InvalidInput, e.what());
  }
}
