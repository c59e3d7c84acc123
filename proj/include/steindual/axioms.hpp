#ifndef STEINDUAL_AXIOMS_HPP
#define STEINDUAL_AXIOMS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steindual/core.hpp"
#include "steindual/relations.hpp"

namespace steindual {

enum class Profile {
  StructuredSemigroup,
  WellStructuredSemigroup,
  WellStructuredSemimodule,
  SteinbergSemigroup,
  SteinbergRing,
  QuasiCartanPair,
  AmpleBundle,
  AmpleRingoidBundle,
};

std::string profile_name(Profile p);
std::optional<Profile> parse_profile(std::string_view name);
std::vector<Profile> all_profiles();

struct LawCheck {
  std::string law;
  bool pass = true;
  std::vector<int> witness;  // empty for laws without free variables
  std::string note;
};

struct AxiomReport {
  std::string profile;
  std::vector<LawCheck> checks;
  // Informational checks that do not affect passed().
  std::vector<LawCheck> extras;

  bool passed() const;
  const LawCheck* find(std::string_view law) const;
  std::vector<std::string> failures() const;
};

// Throws ProfileMismatch when the data cannot carry the profile (a bundle
// profile, a ring profile on a semigroup, a quasi-Cartan check without
// scalars).
AxiomReport check_profile(const StructuredData& data, Profile profile);
AxiomReport check_profile(const FiniteBundle& bundle, Profile profile);

AxiomReport check_expectation_laws(const StructuredData& data);

// Names of the laws a profile checks, in report order.
std::vector<std::string> profile_laws(Profile profile);

// True when the recorded witness still violates the named law on data.
// Throws ContractError for unknown law names.
bool reevaluate(const StructuredData& data, const LawCheck& check);

// (A, A, E(ran Phi), Phi): the semigroup inclusion a quasi-Cartan pair lives in.
StructuredData qc_inclusion(const StructuredData& data);

// Z^{N dagger} of a quasi-Cartan inclusion: Z-inverses of the normalisers of
// ran Phi.
IndexSet invertible_normalisers(const Context& qc);

// R-linear span inside a StructuredData with scalars.
IndexSet span(const StructuredData& data, const IndexSet& B);

// Union of spans of pairwise orthogonal subsets of B.
IndexSet orthospan(const Context& qc, const IndexSet& B);

struct SumClosure {
  IndexSet members;
  int summands = 0;  // iterations until the closure stabilised
};

// Iterated closure of S under adding elements of S.
SumClosure sum_closure(const StructuredData& data);

}  // namespace steindual

#endif  // STEINDUAL_AXIOMS_HPP
