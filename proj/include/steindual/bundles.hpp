#ifndef STEINDUAL_BUNDLES_HPP
#define STEINDUAL_BUNDLES_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "steindual/filters.hpp"
#include "steindual/sections.hpp"

namespace steindual {

class RepresentativeNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a ~_F b: some s in F* has Phi(as) = Phi(bs) and Phi(sa) = Phi(sb).
bool equivalent(const Context& ctx, int a, int b, const IndexSet& F);
// The one-sided variants.
bool equivalent_right(const Context& ctx, int a, int b, const IndexSet& F);
bool equivalent_left(const Context& ctx, int a, int b, const IndexSet& F);

// Classes of ~_F on the whole carrier, each sorted, listed by least member.
std::vector<IndexSet> equivalence_classes(const Context& ctx, const IndexSet& F);

struct UltrafilterBundle {
  UltrafilterGroupoid base;
  std::vector<std::vector<IndexSet>> classes;  // classes[U]
  std::vector<std::vector<int>> class_of;      // class_of[U][a] is a total arrow
  std::vector<std::pair<int, int>> arrow;      // total arrow -> (U, least member)
  FiniteBundle bundle;

  int arrow_of(int U, int a) const { return class_of[U][a]; }
};

// Ringoid bundle when the carrier has addition.  The data must be a
// well-structured semimodule with a zero.
UltrafilterBundle build_bundle(const Context& ctx);

// U -> [a, U].
Section hat(const UltrafilterBundle& ub, int a);

}  // namespace steindual

#endif  // STEINDUAL_BUNDLES_HPP
