#ifndef STEINDUAL_EXAMPLES_HPP
#define STEINDUAL_EXAMPLES_HPP

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "steindual/axioms.hpp"
#include "steindual/core.hpp"

namespace steindual {

class NotLocallyUnital : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Partial injections of {1..n}, named by their image strings ("21", "1-").
StructuredData symmetric_inverse_monoid(int n);
// Subsets of {1..n} under intersection.
StructuredData powerset_algebra(int n);
// n x n matrices over F_q with the diagonal expectation; S = orthospan of the
// invertible normalisers, Z = diagonal idempotents, scalars F_q.
StructuredData matrix_quasi_cartan(int n, int q);

// The one-element semigroup {0}; it has no proper filters.
StructuredData zero_semigroup();

FiniteRing prime_field(int q);
FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b);

FiniteGroupoid pair_groupoid(int n);
FiniteGroupoid discrete_groupoid(int n);

FiniteBundle trivial_ringoid_bundle(const FiniteGroupoid& G, const FiniteRing& R);
StructuredData steinberg_ring_of_groupoid(const FiniteGroupoid& G, const FiniteRing& R);

// (A, A, Z(E(A)), id).
StructuredData pierce_case(const FiniteRing& A);

struct Fixture {
  std::string name;
  Profile profile;
  std::variant<StructuredData, FiniteBundle> value;

  bool is_bundle() const { return value.index() == 1; }
  const StructuredData& data() const { return std::get<0>(value); }
  const FiniteBundle& bundle() const { return std::get<1>(value); }
};

std::vector<std::string> fixture_names();
// Throws std::out_of_range for unknown names.
Fixture fixture(const std::string& name);

}  // namespace steindual

#endif  // STEINDUAL_EXAMPLES_HPP
