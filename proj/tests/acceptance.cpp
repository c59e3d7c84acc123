// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "propositions.hpp"
#include "steindual/axioms.hpp"
#include "steindual/bundles.hpp"
#include "steindual/duality.hpp"
#include "steindual/examples.hpp"
#include "steindual/filters.hpp"
#include "steindual/sections.hpp"

using namespace steindual;

namespace {

std::string fixture_profiles() {
  struct Want {
    std::string name;
    Profile profile;
  };
  std::vector<Want> wants{{"POW2", Profile::SteinbergSemigroup},
                          {"I2", Profile::SteinbergSemigroup},
                          {"M2F2", Profile::QuasiCartanPair},
                          {"M2F2", Profile::SteinbergRing},
                          {"TRIVBUN", Profile::AmpleRingoidBundle}};
  for (const auto& w : wants) {
    Fixture f = fixture(w.name);
    AxiomReport r = f.is_bundle() ? check_profile(f.bundle(), w.profile) : check_profile(f.data(), w.profile);
    if (!r.passed()) return w.name + " fails " + r.failures().front();
  }
  AxiomReport r = check_profile(pierce_case(product_ring(prime_field(2), prime_field(2))), Profile::SteinbergRing);
  return r.passed() ? "" : "pierce_case(F2 x F2) fails " + r.failures().front();
}

std::string filter_oracle() {
  std::vector<std::pair<std::string, StructuredData>> all;
  for (const std::string& n : fixture_names()) {
    Fixture f = fixture(n);
    all.emplace_back(n, f.is_bundle() ? section_structure(f.bundle()).data : f.data());
  }
  all.emplace_back("POW3", powerset_algebra(3));
  int checked = 0;
  for (const auto& [name, d] : all) {
    if (d.S.size() > 12) continue;
    Context ctx(d);
    std::vector<oracle::Set> lib;
    for (const Filter& f : enumerate_filters(ctx)) lib.push_back(f.members);
    std::vector<oracle::Set> brute = oracle::filters(d);
    if (lib != brute) return name + ": principal enumeration differs from subset enumeration";
    std::vector<oracle::Set> ulib;
    for (const Filter& f : enumerate_ultrafilters(ctx)) ulib.push_back(f.members);
    if (ulib != oracle::ultrafilters(d, brute)) return name + ": ultrafilters differ";
    ++checked;
  }
  if (checked < 6) return "too few fixtures checked";
  for (auto [name, count] : std::vector<std::pair<std::string, std::size_t>>{{"POW2", 2}, {"I2", 4}, {"M2F2-S", 4}}) {
    Context ctx(fixture(name).data());
    if (enumerate_ultrafilters(ctx).size() != count) return name + ": wrong ultrafilter count";
  }
  return "";
}

std::string groupoid_shape() {
  UltrafilterGroupoid i2 = ultrafilter_groupoid(Context(fixture("I2").data()));
  UltrafilterGroupoid pow2 = ultrafilter_groupoid(Context(fixture("POW2").data()));
  if (i2.groupoid.size() != 4 || i2.groupoid.cat.units().size() != 2) return "I2 groupoid has the wrong size";
  if (!oracle::categories_isomorphic(i2.groupoid.cat, pair_groupoid(2).cat)) return "I2 is not the pair groupoid";
  if (!oracle::categories_isomorphic(pow2.groupoid.cat, discrete_groupoid(2).cat)) return "POW2 is not discrete";
  return "";
}

// Bijective, multiplicative and (for rings) additive, checked table by table.
std::string iso_by_tables(const SteinbergMorphism& m, int want) {
  const StructuredData &a = m.source, &b = m.target;
  if (a.size() != want || b.size() != want) return "carrier sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size());
  std::vector<int> seen(static_cast<std::size_t>(want), 0);
  for (int x = 0; x < want; ++x)
    if (m.map[x] < 0 || m.map[x] >= want || seen[m.map[x]]++) return "not a bijection";
  for (int x = 0; x < want; ++x) {
    if (oracle::inS(a, x) != oracle::inS(b, m.map[x]) || oracle::inZ(a, x) != oracle::inZ(b, m.map[x])) return "S or Z not matched";
    for (int y = 0; y < want; ++y) {
      if (m.map[a.mul(x, y)] != b.mul(m.map[x], m.map[y])) return "products differ";
      if (a.is_ring() && m.map[a.plus(x, y)] != b.plus(m.map[x], m.map[y])) return "sums differ";
    }
  }
  return "";
}

std::string eta_round_trip() {
  SteinbergMorphism i2 = eta(fixture("I2").data());
  if (auto e = iso_by_tables(i2, 7); !e.empty()) return "I2: " + e;
  SteinbergMorphism m2 = eta(fixture("M2F2").data());
  if (auto e = iso_by_tables(m2, 16); !e.empty()) return "M2F2: " + e;
  if (!m2.target.is_ring()) return "M2F2 image is not a ring";
  return "";
}

std::string epsilon_round_trip() {
  FiniteBundle rho = fixture("TRIVBUN").bundle();
  Epsilon eps = epsilon(rho);
  AxiomReport r = validate_pierce(eps.morphism);
  if (!r.passed()) return "not a Pierce morphism: " + r.failures().front();
  if (auto v = isomorphism_violation(eps.morphism)) return "not an isomorphism: " + v->law;
  const StructuredData& d = eps.dual.ctx->data();
  for (int g = 0; g < rho.base.size(); ++g) {
    const oracle::Set& U = eps.dual.ub.base.ultrafilters[eps.morphism.phi.map[g]].members;
    auto rel = oracle::equiv_matrix(d, U);
    for (int a = 0; a < d.size(); ++a)
      for (int b = 0; b < d.size(); ++b) {
        bool same = eps.sections.sections[a].values[g] == eps.sections.sections[b].values[g];
        if (same != (rel[static_cast<std::size_t>(a) * d.size() + b] != 0))
          return "evaluation and equivalence disagree at " + rho.base.cat.elements[g];
      }
  }
  return "";
}

SteinbergMorphism inverse_of(const SteinbergMorphism& m) {
  SteinbergMorphism inv{m.target, m.source, std::vector<int>(static_cast<std::size_t>(m.target.size()), kUndef)};
  for (int x = 0; x < m.source.size(); ++x) inv.map[m.map[x]] = x;
  return inv;
}

std::string naturality() {
  std::vector<std::pair<std::string, SteinbergMorphism>> ms;
  for (const char* n : {"I2", "POW2", "M2F2", "M2F2-S", "PIERCE-F2xF2"}) ms.emplace_back(std::string("id ") + n, identity_morphism(fixture(n).data()));
  ms.emplace_back("I2 -> M2F2-S", i2_to_m2f2s());
  ms.emplace_back("M2F2-S -> I2", inverse_of(i2_to_m2f2s()));
  ms.emplace_back("POW2 -> I2", pow2_to_i2());
  for (const auto& [name, m] : ms) {
    if (!validate_steinberg_morphism(m).passed()) return name + " is not a morphism";
    AxiomReport r = check_naturality(m);
    if (!r.passed()) return name + " fails " + r.failures().front();
  }
  AxiomReport r = check_naturality(identity_pierce(fixture("TRIVBUN").bundle()));
  return r.passed() ? "" : "id TRIVBUN fails " + r.failures().front();
}

std::string proposition_suite() {
  std::vector<props::Prop> all = props::all();
  if (all.size() < 25) return "only " + std::to_string(all.size()) + " properties";
  std::string failed;
  for (const auto& p : all) {
    std::string e = p.run();
    if (!e.empty()) {
      std::cerr << "  property " << p.name << ": " << e << "\n";
      if (failed.empty()) failed = p.name + ": " + e;
    }
  }
  return failed;
}

std::string negative_controls() {
  StructuredData good = fixture("I2").data();
  StructuredData bad = good;
  int one = bad.at("12");
  bad.phi[one] = bad.at("--");
  AxiomReport r = check_profile(bad, Profile::SteinbergSemigroup);
  if (r.passed()) return "mutated expectation still passes";
  int reevaluated = 0;
  for (const LawCheck& c : r.checks) {
    if (c.pass) continue;
    if (!reevaluate(bad, c)) return c.law + " witness does not reproduce";
    if (!c.witness.empty() && reevaluate(good, c)) return c.law + " witness also fails the unmutated data";
    ++reevaluated;
  }
  if (reevaluated == 0) return "no failing law";

  Context ctx(good);
  IndexSet F = make_set({one});
  if (!is_filter(ctx, F) || !is_proper(ctx, F)) return "{1} is not a proper filter";
  UltrafilterProperties up = ultrafilter_properties(ctx, F);
  if (up.prime) return "{1} reported prime";
  std::pair<int, int> want{good.at("1-"), good.at("-2")};
  if (up.prime_witness != want) return "wrong primality witness";
  auto j = oracle::sup(good, want.first, want.second);
  if (!oracle::orth(good, want.first, want.second) || !j || *j != one) return "witness does not join to 1";
  return "";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::string()> run;
  };
  std::vector<Criterion> criteria{
      {"fixture-profiles", fixture_profiles},   {"filter-oracle", filter_oracle},
      {"groupoid-shape", groupoid_shape},       {"eta-round-trip", eta_round_trip},
      {"epsilon-round-trip", epsilon_round_trip}, {"naturality", naturality},
      {"proposition-suite", proposition_suite}, {"negative-controls", negative_controls},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string e;
    try {
      e = criteria[i].run();
    } catch (const std::exception& ex) {
      e = std::string("exception: ") + ex.what();
    }
    std::cout << (e.empty() ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].name;
    if (!e.empty()) std::cout << " (" << e << ")";
    std::cout << "\n";
    failures += !e.empty();
  }
  return failures == 0 ? 0 : 1;
}
