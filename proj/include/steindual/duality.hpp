#ifndef STEINDUAL_DUALITY_HPP
#define STEINDUAL_DUALITY_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "steindual/axioms.hpp"
#include "steindual/bundles.hpp"
#include "steindual/sections.hpp"

namespace steindual {

class NotUltrafilter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IllDefined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// map acts on carrier indices of source.
struct SteinbergMorphism {
  StructuredData source;
  StructuredData target;
  std::vector<int> map;
};

// A functor from a subgroupoid of source (G') into target (G); map holds
// kUndef off the domain.
struct EtaleMorphism {
  FiniteGroupoid source;
  FiniteGroupoid target;
  std::vector<int> map;

  IndexSet domain() const;
};

// (rho', beta, phi, rho): phi maps part of the base of rho' into the base of
// rho, beta maps the pullback of rho along phi into rho'.
struct PierceMorphism {
  FiniteBundle target;  // rho'
  FiniteBundle source;  // rho
  EtaleMorphism phi;
  std::vector<int> beta;  // indexed like pullback_pairs
};

// Pairs (g', c) with g' in the domain of phi and rho(c) = phi(g'), in order of
// g' then c.
std::vector<std::pair<int, int>> pullback_pairs(const EtaleMorphism& phi, const FiniteBundle& rho);
int pullback_index(const std::vector<std::pair<int, int>>& pairs, int g, int c);

AxiomReport validate_steinberg_morphism(const SteinbergMorphism& m);
AxiomReport validate_etale(const EtaleMorphism& phi);
AxiomReport validate_pierce(const PierceMorphism& p);

// Bijective, structure-reflecting and a valid morphism.
std::optional<Violation> isomorphism_violation(const SteinbergMorphism& m);
std::optional<Violation> isomorphism_violation(const PierceMorphism& p);

SteinbergMorphism identity_morphism(const StructuredData& d);
SteinbergMorphism compose(const SteinbergMorphism& second, const SteinbergMorphism& first);
EtaleMorphism compose(const EtaleMorphism& second, const EtaleMorphism& first);
EtaleMorphism identity_etale(const FiniteGroupoid& g);
PierceMorphism identity_pierce(const FiniteBundle& b);

bool same_bundle(const FiniteBundle& a, const FiniteBundle& b);
bool same_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b);
bool same_structure(const StructuredData& a, const StructuredData& b);

// Pullback along phi; the base is the domain of phi, reindexed in order.
FiniteBundle pullback_bundle(const EtaleMorphism& phi, const FiniteBundle& rho);

// Both act on section_structure carriers.
SteinbergMorphism pullback_sections(const EtaleMorphism& phi, const FiniteBundle& rho);
SteinbergMorphism pushforward_sections(const PierceMorphism& p);

// A Steinberg semigroup or ring together with its ultrafilter bundle.
struct Dual {
  std::shared_ptr<const Context> ctx;
  UltrafilterBundle ub;
};

Dual dualize(const StructuredData& d);

// Section of the target bundle of p obtained from a section of its source.
Section apply_pierce(const PierceMorphism& p, const Section& a);

SteinbergMorphism functor_S(const PierceMorphism& p);
EtaleMorphism induced_groupoid_map(const SteinbergMorphism& m, const Dual& src, const Dual& tgt);
PierceMorphism functor_U(const SteinbergMorphism& m, const Dual& src, const Dual& tgt);
PierceMorphism functor_U(const SteinbergMorphism& m);

// p2 after p1: p1 = (rho', beta, phi, rho), p2 = (rho'', beta', phi', rho').
PierceMorphism compose_pierce(const PierceMorphism& p2, const PierceMorphism& p1);

// a -> a-hat into the section structure of the ultrafilter bundle.
SteinbergMorphism eta(const StructuredData& d);
SteinbergMorphism eta(const Dual& dual);

struct Epsilon {
  SectionStructure sections;
  Dual dual;  // of the section structure
  PierceMorphism morphism;  // from the dual bundle to rho
};

Epsilon epsilon(const FiniteBundle& rho);

// Elementwise failures of the naturality equations.
AxiomReport check_naturality(const SteinbergMorphism& m);
AxiomReport check_naturality(const PierceMorphism& p);

// Named morphisms between fixtures.
SteinbergMorphism i2_to_m2f2s();
SteinbergMorphism pow2_to_i2();
SteinbergMorphism zero_morphism(const StructuredData& source, const StructuredData& target);

}  // namespace steindual

#endif  // STEINDUAL_DUALITY_HPP
