#include "doctest.h"
#include "oracle.hpp"
#include "steindual/bundles.hpp"
#include "steindual/examples.hpp"
#include "steindual/sections.hpp"

using namespace steindual;

TEST_CASE("ultrafilter bundles of the fixtures") {
  UltrafilterBundle i2 = build_bundle(Context(fixture("I2").data()));
  CHECK(i2.bundle.base.size() == 4);
  CHECK(i2.bundle.total.size() == 8);
  for (const IndexSet& f : i2.bundle.fiber_lists()) CHECK(f.size() == 2);
  CHECK_FALSE(i2.bundle.is_ringoid());
  CHECK(check_profile(i2.bundle, Profile::AmpleBundle).passed());

  UltrafilterBundle m = build_bundle(Context(fixture("M2F2").data()));
  CHECK(m.bundle.is_ringoid());
  CHECK(m.bundle.total.size() == 8);
  CHECK(check_profile(m.bundle, Profile::AmpleRingoidBundle).passed());

  UltrafilterBundle p = build_bundle(Context(fixture("POW2").data()));
  CHECK(p.bundle.base.cat.units().size() == 2);
  CHECK(p.bundle.total.size() == 4);

  UltrafilterBundle z = build_bundle(Context(zero_semigroup()));
  CHECK(z.bundle.base.size() == 0);
  CHECK(z.bundle.total.size() == 0);
}

TEST_CASE("equivalence modulo an ultrafilter") {
  StructuredData i2 = fixture("I2").data();
  Context ctx(i2);
  IndexSet U = make_set({i2.at("1-"), i2.at("12")});
  CHECK(equivalent(ctx, i2.at("1-"), i2.at("12"), U));
  CHECK_FALSE(equivalent(ctx, i2.at("1-"), i2.at("--"), U));
  for (int a = 0; a < i2.size(); ++a) CHECK(equivalent(ctx, a, a, U));

  // Over the arrow (1,2) two matrices are equivalent exactly when their (1,2) entries agree.
  StructuredData m = fixture("M2F2").data();
  Context mc(m);
  IndexSet V = make_set({m.at("01;00"), m.at("01;10")});
  REQUIRE(is_filter(mc, V));
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b) {
      bool same_entry = m.elements[a][1] == m.elements[b][1];
      CHECK(equivalent(mc, a, b, V) == same_entry);
      CHECK(oracle::equiv(m, V, a, b) == same_entry);
    }
}

TEST_CASE("sections of the trivial matrix bundle") {
  FiniteBundle b = fixture("TRIVBUN").bundle();
  SectionStructure st = section_structure(b);
  CHECK(st.data.size() == 16);
  CHECK(st.data.S.size() == 7);
  CHECK(st.data.Z.size() == 4);
  CHECK(st.data.is_ring());
  CHECK(all_sections(b).size() == 16);
  CHECK(slice_supported_sections(b).size() == 7);
  CHECK(check_profile(st.data, Profile::SteinbergRing).passed());
  for (int i = 0; i < st.data.size(); ++i) CHECK(st.index_of(st.sections[i]) == i);

  Section zero = zero_section(b);
  CHECK(support(b, zero).empty());
  CHECK(slice_supported(b, zero));
  for (const Section& a : all_sections(b)) {
    CHECK(is_section(b, a));
    CHECK(section_sum(b, a, zero) == a);
    CHECK(section_convolution(b, a, zero) == zero);
  }
  CHECK(relation_characterizations(b, st).passed());
}

TEST_CASE("sections of small bundles") {
  FiniteBundle one = trivial_ringoid_bundle(discrete_groupoid(1), prime_field(2));
  CHECK(section_structure(one).data.size() == 2);

  UltrafilterBundle i2 = build_bundle(Context(fixture("I2").data()));
  SectionStructure st = section_structure(i2.bundle);
  CHECK(st.data.size() == 7);
  CHECK(static_cast<long>(slice_supported_sections(i2.bundle).size()) == oracle::count_slice_sections(i2.bundle));
  CHECK(static_cast<long>(all_sections(i2.bundle).size()) == oracle::count_all_sections(i2.bundle));
  SectionStructure sm = section_semimodule(i2.bundle);
  CHECK(sm.data.size() == 16);
  CHECK(sm.data.S.size() == 7);
  CHECK(check_profile(sm.data, Profile::WellStructuredSemimodule).passed());
  for (int a : st.data.S) {
    Section e = expectation(i2.bundle, st.sections[a]);
    CHECK(expectation(i2.bundle, e) == e);
    CHECK(unit_valued(i2.bundle, e));
  }
}
