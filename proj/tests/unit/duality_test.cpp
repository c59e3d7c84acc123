#include "doctest.h"
#include "steindual/duality.hpp"
#include "steindual/examples.hpp"

using namespace steindual;

namespace {
// The automorphism of a pair groupoid exchanging its two objects.
EtaleMorphism swap(const FiniteGroupoid& g) {
  EtaleMorphism e{g, g, std::vector<int>(static_cast<std::size_t>(g.size()), kUndef)};
  IndexSet u = g.cat.units();
  auto other = [&](int x) { return x == u[0] ? u[1] : u[0]; };
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (g.cat.src[y] == other(g.cat.src[x]) && g.cat.rng[y] == other(g.cat.rng[x])) e.map[x] = y;
  return e;
}
}  // namespace

TEST_CASE("Steinberg morphisms") {
  StructuredData i2 = fixture("I2").data();
  CHECK(validate_steinberg_morphism(identity_morphism(i2)).passed());
  CHECK(validate_steinberg_morphism(i2_to_m2f2s()).passed());
  CHECK(validate_steinberg_morphism(pow2_to_i2()).passed());
  SteinbergMorphism z = zero_morphism(i2, i2);
  CHECK(validate_steinberg_morphism(z).passed());
  CHECK_FALSE(isomorphism_violation(i2_to_m2f2s()).has_value());
  auto v = isomorphism_violation(pow2_to_i2());
  REQUIRE(v);
  CHECK(v->law == "NotSurjective");

  SteinbergMorphism bad = identity_morphism(i2);
  bad.map[i2.at("2-")] = i2.at("-1");
  AxiomReport r = validate_steinberg_morphism(bad);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.find("Multiplicative")->pass);

  CHECK(compose(identity_morphism(i2), pow2_to_i2()).map == pow2_to_i2().map);
  CHECK_THROWS_AS(compose(pow2_to_i2(), i2_to_m2f2s()), DomainMismatch);
}

TEST_CASE("induced groupoid maps") {
  SteinbergMorphism inc = pow2_to_i2();
  Dual src = dualize(inc.source), tgt = dualize(inc.target);
  EtaleMorphism e = induced_groupoid_map(inc, src, tgt);
  CHECK(e.domain() == tgt.ub.base.groupoid.cat.units());
  CHECK(validate_etale(e).passed());

  SteinbergMorphism iso = i2_to_m2f2s();
  Dual a = dualize(iso.source), b = dualize(iso.target);
  EtaleMorphism f = induced_groupoid_map(iso, a, b);
  CHECK(f.domain().size() == 4);
  CHECK(make_set(f.map) == all_indices(4));

  StructuredData i2 = fixture("I2").data();
  PierceMorphism zp = functor_U(zero_morphism(i2, i2));
  CHECK(zp.phi.domain().empty());
  CHECK(zp.beta.empty());
  CHECK(validate_pierce(zp).passed());

  PierceMorphism id = functor_U(identity_morphism(i2));
  CHECK_FALSE(isomorphism_violation(id).has_value());
  PierceMorphism up = functor_U(iso);
  CHECK(validate_pierce(up).passed());
  CHECK_FALSE(isomorphism_violation(up).has_value());
}

TEST_CASE("pullbacks along the swap") {
  FiniteBundle rho = fixture("TRIVBUN").bundle();
  EtaleMorphism sw = swap(rho.base);
  CHECK(validate_etale(sw).passed());
  CHECK(same_bundle(pullback_bundle(identity_etale(rho.base), rho), rho));
  FiniteBundle pulled = pullback_bundle(sw, rho);
  CHECK(pulled.total.size() == rho.total.size());
  CHECK(check_profile(pulled, Profile::AmpleRingoidBundle).passed());

  SteinbergMorphism t = pullback_sections(sw, rho);
  CHECK(validate_steinberg_morphism(t).passed());
  CHECK_FALSE(isomorphism_violation(t).has_value());
  EtaleMorphism twice = compose(sw, sw);
  CHECK(twice.map == all_indices(rho.base.size()));
  CHECK(same_bundle(pullback_bundle(twice, rho), rho));

  EtaleMorphism unit{discrete_groupoid(1), rho.base, {rho.base.cat.units()[0]}};
  FiniteBundle one = pullback_bundle(unit, rho);
  CHECK(one.base.size() == 1);
  CHECK(one.total.size() == 2);
  // A single unit is not open in the star sense, so restriction to it is
  // additive but not multiplicative.
  CHECK_FALSE(validate_etale(unit).find("StarBijective")->pass);
  SteinbergMorphism restrict = pullback_sections(unit, rho);
  CHECK(restrict.target.size() == 2);
  CHECK_FALSE(validate_steinberg_morphism(restrict).find("Multiplicative")->pass);
  CHECK(validate_steinberg_morphism(restrict).find("Additive")->pass);
}

TEST_CASE("Pierce composition") {
  FiniteBundle rho = fixture("TRIVBUN").bundle();
  PierceMorphism id = identity_pierce(rho);
  CHECK(validate_pierce(id).passed());
  PierceMorphism u = functor_U(i2_to_m2f2s());
  PierceMorphism left = compose_pierce(identity_pierce(u.target), u);
  PierceMorphism right = compose_pierce(u, identity_pierce(u.source));
  CHECK(left.phi.map == u.phi.map);
  CHECK(left.beta == u.beta);
  CHECK(right.phi.map == u.phi.map);
  CHECK(right.beta == u.beta);

  PierceMorphism a = functor_U(pow2_to_i2()), b = functor_U(i2_to_m2f2s());
  PierceMorphism c = functor_U(identity_morphism(fixture("M2F2-S").data()));
  PierceMorphism x = compose_pierce(c, compose_pierce(b, a)), y = compose_pierce(compose_pierce(c, b), a);
  CHECK(x.phi.map == y.phi.map);
  CHECK(x.beta == y.beta);

  SteinbergMorphism push = pushforward_sections(id);
  CHECK_FALSE(isomorphism_violation(push).has_value());
  CHECK(functor_S(id).map == identity_morphism(functor_S(id).source).map);
}

TEST_CASE("unit and counit") {
  for (const char* name : {"I2", "POW2", "M2F2", "M2F2-S", "PIERCE-F2xF2"}) {
    CAPTURE(name);
    SteinbergMorphism e = eta(fixture(name).data());
    CHECK(validate_steinberg_morphism(e).passed());
    CHECK_FALSE(isomorphism_violation(e).has_value());
  }
  CHECK(eta(zero_semigroup()).target.size() == 1);
  Epsilon eps = epsilon(fixture("TRIVBUN").bundle());
  CHECK(validate_pierce(eps.morphism).passed());
  CHECK_FALSE(isomorphism_violation(eps.morphism).has_value());
}

TEST_CASE("naturality") {
  CHECK(check_naturality(i2_to_m2f2s()).passed());
  CHECK(check_naturality(pow2_to_i2()).passed());
  StructuredData i2 = fixture("I2").data();
  CHECK(check_naturality(zero_morphism(i2, i2)).passed());
  CHECK(check_naturality(identity_pierce(fixture("TRIVBUN").bundle())).passed());
  AxiomReport r = check_naturality(pow2_to_i2());
  CHECK(r.find("EtaNaturality"));
  CHECK(r.find("EpsilonGroupoidNaturality"));
  CHECK(r.find("EpsilonBundleNaturality"));
}
