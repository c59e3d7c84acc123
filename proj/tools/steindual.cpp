#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "steindual/axioms.hpp"
#include "steindual/bundles.hpp"
#include "steindual/duality.hpp"
#include "steindual/examples.hpp"
#include "steindual/filters.hpp"
#include "steindual/io.hpp"
#include "steindual/sections.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace steindual;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kRefused = 2;

struct Options {
  std::string file;
  std::string profile;
  std::string out;
  std::string format = "human";
  bool oracle = false;
  std::string example;
  std::string all_dir;
  bool list = false;
};

// Output goes to --out when given, stdout otherwise.
void deliver(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out, text);
  }
}

std::string witness_text(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + std::to_string(w[i]);
  return s + ")";
}

json check_json(const LawCheck& c) {
  return json{{"law", c.law}, {"pass", c.pass}, {"witness", c.witness}, {"note", c.note}};
}

void render_report(const AxiomReport& r, const Options& o, std::ostream& os) {
  if (o.format == "machine") {
    json checks = json::array(), extras = json::array();
    for (const auto& c : r.checks) checks.push_back(check_json(c));
    for (const auto& c : r.extras) extras.push_back(check_json(c));
    os << canonical_json(json{{"profile", r.profile}, {"passed", r.passed()}, {"checks", checks}, {"extras", extras}}.dump());
    return;
  }
  os << "profile " << r.profile << "\n";
  auto line = [&](const LawCheck& c, const char* prefix) {
    os << prefix << (c.pass ? "PASS " : "FAIL ") << c.law;
    if (!c.pass && !c.witness.empty()) os << " witness " << witness_text(c.witness);
    if (!c.note.empty()) os << " (" << c.note << ")";
    os << "\n";
  };
  for (const auto& c : r.checks) line(c, "  ");
  for (const auto& c : r.extras) line(c, "  extra ");
  auto f = r.failures();
  os << "result: " << (f.empty() ? "PASS" : "FAIL");
  if (!f.empty()) os << " (" << f.size() << " of " << r.checks.size() << " failed)";
  os << "\n";
}

Profile default_profile(const StructureFile& f) {
  auto it = f.metadata.find("profile");
  if (it != f.metadata.end()) {
    auto p = parse_profile(it->second);
    if (!p) throw ParseError("metadata.profile: unknown profile " + it->second);
    return *p;
  }
  if (f.kind == "semigroup") return Profile::SteinbergSemigroup;
  if (f.kind == "ring") return Profile::SteinbergRing;
  if (f.kind == "structured") return Profile::WellStructuredSemimodule;
  if (f.kind == "ringoid-bundle") return Profile::AmpleRingoidBundle;
  return Profile::AmpleBundle;
}

Profile chosen_profile(const Options& o, const StructureFile& f) {
  if (o.profile.empty()) return default_profile(f);
  auto p = parse_profile(o.profile);
  if (!p) throw ParseError("--profile: unknown profile " + o.profile);
  return *p;
}

AxiomReport profile_report(const Document& v, Profile p) {
  if (auto* d = std::get_if<StructuredData>(&v)) return check_profile(*d, p);
  return check_profile(std::get<FiniteBundle>(v), p);
}

// Brute-force cross-checks appended as ordinary checks.
void add_oracles(const Document& v, AxiomReport& r) {
  if (auto* d = std::get_if<StructuredData>(&v)) {
    LawCheck rerun{"Oracle.WitnessesReevaluate", true, {}, ""};
    for (const auto& c : r.checks) {
      if (c.pass || c.witness.empty()) continue;
      try {
        if (!reevaluate(*d, c)) rerun = {rerun.law, false, c.witness, c.law + " witness does not re-evaluate"};
      } catch (const ContractError&) {
      }
    }
    r.checks.push_back(rerun);
    Context ctx(*d);
    LawCheck filters{"Oracle.FilterEnumeration", true, {}, ""};
    try {
      if (ctx.well_structured()) {
        auto a = enumerate_filters(ctx);
        auto b = enumerate_filters_by_subsets(ctx);
        if (a.size() != b.size() || !std::equal(a.begin(), a.end(), b.begin())) {
          filters.pass = false;
          filters.note = "principal and subset enumerations differ";
        }
      } else {
        filters.note = "skipped: not well-structured";
      }
    } catch (const TooLarge&) {
      filters.note = "skipped: |S| > 20";
    }
    r.checks.push_back(filters);
    return;
  }
  const auto& b = std::get<FiniteBundle>(v);
  LawCheck agree{"Oracle.BundleValidator", true, {}, ""};
  auto direct = b.fibers ? validate_ringoid_bundle(b) : validate_bundle(b);
  auto staged = bundle_law_results(b, b.fibers.has_value());
  bool staged_ok = std::all_of(staged.begin(), staged.end(), [](const auto& s) { return !s.violation; });
  if (staged_ok != direct.ok()) {
    agree.pass = false;
    agree.note = "staged and direct bundle validation disagree";
  }
  r.checks.push_back(agree);
}

int cmd_check(const Options& o) {
  StructureFile f = load_structure(o.file);
  AxiomReport r;
  if (auto* m = std::get_if<SteinbergMorphism>(&f.value)) {
    r = validate_steinberg_morphism(*m);
  } else if (auto* p = std::get_if<PierceMorphism>(&f.value)) {
    r = validate_pierce(*p);
  } else {
    r = profile_report(f.value, chosen_profile(o, f));
    if (o.oracle) add_oracles(f.value, r);
  }
  render_report(r, o, std::cout);
  return r.passed() ? kPass : kFail;
}

// Runs the profile gate; prints the report to stderr on failure.
bool gate(const Options& o, const StructureFile& f) {
  AxiomReport r = profile_report(f.value, chosen_profile(o, f));
  if (r.passed()) return true;
  std::cerr << "refused: input fails its profile\n";
  render_report(r, o, std::cerr);
  return false;
}

int cmd_dualize(const Options& o) {
  StructureFile f = load_structure(o.file);
  if (std::holds_alternative<SteinbergMorphism>(f.value) || std::holds_alternative<PierceMorphism>(f.value))
    throw ParseError("kind: dualize takes a structure or a bundle; use apply-functor for morphisms");
  if (!gate(o, f)) return kFail;
  if (auto* d = std::get_if<StructuredData>(&f.value)) {
    Dual dual = dualize(*d);
    deliver(o, emit_structure(make_file(dual.ub.bundle, {{"derived", "ultrafilter bundle"}})));
  } else {
    SectionStructure st = section_structure(std::get<FiniteBundle>(f.value));
    deliver(o, emit_structure(make_file(st.data, {{"derived", "section structure"}})));
  }
  return kPass;
}

int cmd_roundtrip(const Options& o) {
  StructureFile f = load_structure(o.file);
  if (std::holds_alternative<SteinbergMorphism>(f.value) || std::holds_alternative<PierceMorphism>(f.value))
    throw ParseError("kind: roundtrip takes a structure or a bundle");
  if (!gate(o, f)) return kFail;
  json rows = json::array();
  std::optional<Violation> v;
  std::string what;
  std::ostringstream human;
  if (auto* d = std::get_if<StructuredData>(&f.value)) {
    Dual dual = dualize(*d);
    SteinbergMorphism e = eta(dual);
    v = isomorphism_violation(e);
    what = "eta " + std::to_string(e.source.size()) + " <-> " + std::to_string(e.target.size());
    for (int a = 0; a < d->size(); ++a) {
      rows.push_back(json::array({d->elements[a], e.target.elements[e.map[a]]}));
      human << "  " << d->elements[a] << " -> " << e.target.elements[e.map[a]] << "\n";
    }
  } else {
    const auto& b = std::get<FiniteBundle>(f.value);
    Epsilon ep = epsilon(b);
    v = isomorphism_violation(ep.morphism);
    what = "epsilon on " + std::to_string(b.base.size()) + " base arrows";
    const auto& G = ep.dual.ub.base.groupoid.cat;
    for (int g = 0; g < b.base.size(); ++g) {
      rows.push_back(json::array({b.base.cat.elements[g], G.elements[ep.morphism.phi.map[g]]}));
      human << "  " << b.base.cat.elements[g] << " -> " << G.elements[ep.morphism.phi.map[g]] << "\n";
    }
    auto pairs = pullback_pairs(ep.morphism.phi, ep.morphism.source);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string from = ep.morphism.source.total.elements[pairs[i].second];
      const std::string to = b.total.elements[ep.morphism.beta[i]];
      rows.push_back(json::array({from, to}));
      human << "  " << from << " -> " << to << "\n";
    }
  }
  bool iso = !v.has_value();
  if (o.format == "machine") {
    json out{{"map", rows}, {"isomorphism", iso}, {"summary", what}};
    if (v) out["violation"] = json{{"law", v->law}, {"witness", v->witness}};
    std::cout << canonical_json(out.dump());
  } else {
    std::cout << what << "\n" << human.str();
    if (iso) {
      std::cout << "result: isomorphism\n";
    } else {
      std::cout << "result: not an isomorphism, " << v->law << " witness " << witness_text(v->witness) << "\n";
    }
  }
  return iso ? kPass : kFail;
}

bool endpoints_pass(const Options& o, const Document& a, const Document& b) {
  auto ok = [&](const Document& d) {
    StructureFile f;
    if (auto* s = std::get_if<StructuredData>(&d)) {
      f = make_file(*s);
    } else {
      f = make_file(std::get<FiniteBundle>(d));
    }
    Options plain = o;
    plain.profile.clear();
    return gate(plain, f);
  };
  return ok(a) && ok(b);
}

int cmd_apply_functor(const Options& o) {
  StructureFile f = load_structure(o.file);
  std::ostream& report_os = o.out.empty() ? std::cerr : std::cout;
  if (auto* m = std::get_if<SteinbergMorphism>(&f.value)) {
    AxiomReport valid = validate_steinberg_morphism(*m);
    if (!valid.passed()) {
      render_report(valid, o, report_os);
      return kFail;
    }
    if (!endpoints_pass(o, m->source, m->target)) return kFail;
    PierceMorphism p = functor_U(*m);
    deliver(o, emit_structure(make_file(p, {{"derived", "groupoid and fiber maps"}})));
    AxiomReport nat = check_naturality(*m);
    render_report(nat, o, report_os);
    return nat.passed() ? kPass : kFail;
  }
  if (auto* p = std::get_if<PierceMorphism>(&f.value)) {
    AxiomReport valid = validate_pierce(*p);
    if (!valid.passed()) {
      render_report(valid, o, report_os);
      return kFail;
    }
    if (!endpoints_pass(o, p->source, p->target)) return kFail;
    SteinbergMorphism m = functor_S(*p);
    deliver(o, emit_structure(make_file(m, {{"derived", "section morphism"}})));
    AxiomReport nat = check_naturality(*p);
    render_report(nat, o, report_os);
    return nat.passed() ? kPass : kFail;
  }
  throw ParseError("kind: apply-functor takes a morphism or a pierce-morphism");
}

// ---------------------------------------------------------------- examples

FiniteRing ring_spec(const std::string& s) {
  std::vector<FiniteRing> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, 'x')) {
    if (tok.size() < 2 || tok[0] != 'F') throw ParseError("example: ring must look like F2, F3 or F2xF3");
    parts.push_back(prime_field(std::stoi(tok.substr(1))));
  }
  if (parts.empty()) throw ParseError("example: empty ring spec");
  FiniteRing r = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) r = product_ring(r, parts[i]);
  return r;
}

FiniteGroupoid groupoid_spec(const std::string& shape, int n) {
  if (shape == "pair") return pair_groupoid(n);
  if (shape == "discrete") return discrete_groupoid(n);
  throw ParseError("example: groupoid must be pair or discrete");
}

const std::vector<std::string> kMorphismExamples{"I2-TO-M2F2-S", "POW2-TO-I2", "ID-I2", "ZERO-I2"};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) out.push_back(tok);
  return out;
}

int to_int(const std::string& s) {
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw ParseError("example: expected an integer, found " + s);
  }
}

std::pair<std::string, std::string> morphism_endpoints(const std::string& name) {
  if (name == "I2-TO-M2F2-S") return {"I2", "M2F2-S"};
  if (name == "POW2-TO-I2") return {"POW2", "I2"};
  return {"I2", "I2"};
}

SteinbergMorphism morphism_example(const std::string& name) {
  if (name == "I2-TO-M2F2-S") return i2_to_m2f2s();
  if (name == "POW2-TO-I2") return pow2_to_i2();
  StructuredData i2 = fixture("I2").data();
  if (name == "ID-I2") return identity_morphism(i2);
  return zero_morphism(i2, i2);
}

StructureFile example_file(const std::string& name) {
  auto names = fixture_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) {
    Fixture fx = fixture(name);
    std::map<std::string, std::string> meta{{"name", name}, {"profile", profile_name(fx.profile)}};
    if (fx.is_bundle()) return make_file(fx.bundle(), meta);
    return make_file(fx.data(), meta);
  }
  if (std::find(kMorphismExamples.begin(), kMorphismExamples.end(), name) != kMorphismExamples.end())
    return make_file(morphism_example(name), {{"name", name}});
  auto p = split(name);
  std::map<std::string, std::string> meta{{"name", name}};
  if (p[0] == "zero" && p.size() == 1) return make_file(zero_semigroup(), meta);
  if (p[0] == "sim" && p.size() == 2) return make_file(symmetric_inverse_monoid(to_int(p[1])), meta);
  if (p[0] == "pow" && p.size() == 2) return make_file(powerset_algebra(to_int(p[1])), meta);
  if (p[0] == "mat" && p.size() == 3) return make_file(matrix_quasi_cartan(to_int(p[1]), to_int(p[2])), meta);
  if (p[0] == "pierce" && p.size() == 2) return make_file(pierce_case(ring_spec(p[1])), meta);
  if (p[0] == "trivbun" && p.size() == 4)
    return make_file(trivial_ringoid_bundle(groupoid_spec(p[1], to_int(p[2])), ring_spec(p[3])), meta);
  if (p[0] == "steinberg" && p.size() == 4)
    return make_file(steinberg_ring_of_groupoid(groupoid_spec(p[1], to_int(p[2])), ring_spec(p[3])), meta);
  throw ParseError("example: unknown example " + name + " (see --list)");
}

int cmd_example(const Options& o) {
  if (o.list) {
    for (const auto& n : fixture_names()) std::cout << n << "\n";
    for (const auto& n : kMorphismExamples) std::cout << n << "\n";
    std::cout << "zero\nsim:N\npow:N\nmat:N:Q\npierce:RING\ntrivbun:pair|discrete:N:RING\n"
                 "steinberg:pair|discrete:N:RING\n";
    return kPass;
  }
  if (!o.all_dir.empty()) {
    fs::path dir(o.all_dir);
    fs::create_directories(dir);
    for (const auto& n : fixture_names()) write_file(dir / (n + ".json"), emit_structure(example_file(n)));
    for (const auto& n : kMorphismExamples) {
      StructureFile f = example_file(n);
      auto [a, b] = morphism_endpoints(n);
      f.source_ref = EndpointRef{a + ".json", sha256_hex(read_file(dir / (a + ".json")))};
      f.target_ref = EndpointRef{b + ".json", sha256_hex(read_file(dir / (b + ".json")))};
      write_file(dir / (n + ".json"), emit_structure(f));
    }
    return kPass;
  }
  if (o.example.empty()) throw ParseError("example: give a name, --list or --all DIR");
  deliver(o, emit_structure(example_file(o.example)));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Steinberg semigroups and rings, their ultrafilter bundles, and the functors between them"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"human", "machine"}));
  app.add_flag("--oracle", o.oracle, "Add brute-force cross-checks to reports");

  auto* check = app.add_subcommand("check", "Check a file against an axiom profile");
  check->add_option("file", o.file)->required();
  check->add_option("--profile", o.profile, "Profile name");

  auto* dual = app.add_subcommand("dualize", "Structure to ultrafilter bundle, or bundle to section structure");
  dual->add_option("file", o.file)->required();
  dual->add_option("--profile", o.profile, "Profile used as the input gate");
  dual->add_option("--out", o.out, "Output file");

  auto* round = app.add_subcommand("roundtrip", "Verify eta or epsilon is an isomorphism");
  round->add_option("file", o.file)->required();
  round->add_option("--profile", o.profile, "Profile used as the input gate");

  auto* apply = app.add_subcommand("apply-functor", "Translate a morphism across the duality");
  apply->add_option("file", o.file)->required();
  apply->add_option("--out", o.out, "Output file");

  auto* ex = app.add_subcommand("example", "Emit a fixture or generated example");
  ex->add_option("name", o.example);
  ex->add_option("--out", o.out, "Output file");
  ex->add_option("--all", o.all_dir, "Write every fixture into this directory");
  ex->add_flag("--list", o.list, "List example names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kRefused;
  }

  try {
    if (*check) return cmd_check(o);
    if (*dual) return cmd_dualize(o);
    if (*round) return cmd_roundtrip(o);
    if (*apply) return cmd_apply_functor(o);
    return cmd_example(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kRefused;
  } catch (const ProfileMismatch& e) {
    std::cerr << "ProfileMismatch: " << e.what() << "\n";
    return kRefused;
  } catch (const TooLarge& e) {
    std::cerr << "TooLarge: " << e.what() << "\n";
    return kRefused;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kFail;
  }
}
