#ifndef STEINDUAL_CORE_HPP
#define STEINDUAL_CORE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace steindual {

// Marker for undefined entries in partial tables.
inline constexpr int kUndef = -1;

// Sorted, duplicate-free list of element indices.
using IndexSet = std::vector<int>;

IndexSet make_set(std::vector<int> v);
bool contains(const IndexSet& s, int x);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
bool is_subset(const IndexSet& a, const IndexSet& b);
IndexSet all_indices(int n);

class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ProfileMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A named law that failed, with the tuple of indices that makes it fail.
struct Violation {
  std::string law;
  std::vector<int> witness;
  std::string note;
};

template <class T>
class Checked {
 public:
  Checked(T value) : v_(std::move(value)) {}
  Checked(Violation v) : v_(std::move(v)) {}

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }
  const T& value() const { return std::get<0>(v_); }
  T& value() { return std::get<0>(v_); }
  const Violation& violation() const { return std::get<1>(v_); }

 private:
  std::variant<T, Violation> v_;
};

// Largest carrier any generator or loader will accept; STEINDUAL_MAX_SIZE
// overrides the default of 4096.
std::size_t max_carrier_size();

std::optional<int> find_zero(int n, const std::vector<int>& mult);

struct FiniteSemigroup {
  std::vector<std::string> elements;
  std::vector<int> mult;  // row-major n x n
  std::optional<int> zero;

  int size() const { return static_cast<int>(elements.size()); }
  int mul(int a, int b) const { return mult[static_cast<std::size_t>(a) * elements.size() + b]; }
};

Checked<FiniteSemigroup> validate_semigroup(std::vector<std::string> elements,
                                            std::vector<int> mult,
                                            std::optional<int> declared_zero = std::nullopt);

struct FiniteRing {
  std::vector<std::string> elements;
  std::vector<int> add;
  std::vector<int> neg;
  int zero = 0;
  std::vector<int> mult;

  int size() const { return static_cast<int>(elements.size()); }
  int plus(int a, int b) const { return add[static_cast<std::size_t>(a) * elements.size() + b]; }
  int mul(int a, int b) const { return mult[static_cast<std::size_t>(a) * elements.size() + b]; }
  int minus(int a, int b) const { return plus(a, neg[b]); }
  std::optional<int> one() const;
};

Checked<FiniteRing> validate_ring(FiniteRing candidate);

struct FiniteCategory {
  std::vector<std::string> elements;
  std::vector<int> src;
  std::vector<int> rng;
  std::vector<int> compose;  // row-major, kUndef where src(a) != rng(b)

  int size() const { return static_cast<int>(elements.size()); }
  int comp(int a, int b) const {
    return compose[static_cast<std::size_t>(a) * elements.size() + b];
  }
  IndexSet units() const;
  bool is_unit(int a) const { return src[a] == a; }
};

Checked<FiniteCategory> validate_category(FiniteCategory candidate);

struct CoreInfo {
  IndexSet arrows;
  std::vector<int> inverse;  // kUndef off the core
};

CoreInfo core(const FiniteCategory& c);

struct FiniteGroupoid {
  FiniteCategory cat;
  std::vector<int> inv;

  int size() const { return cat.size(); }
};

Checked<FiniteGroupoid> validate_groupoid(FiniteCategory cat);
bool is_slice(const FiniteGroupoid& g, const IndexSet& arrows);

struct FiberAddition {
  std::vector<int> add;  // |C| x |C|, kUndef across fibers
  std::vector<int> neg;
};

// A projection functor rho from total onto base with a zero section.  When
// fibers is set the bundle is a ringoid bundle.
struct FiniteBundle {
  FiniteCategory total;
  FiniteGroupoid base;
  std::vector<int> rho;
  std::vector<int> zero;
  std::optional<FiberAddition> fibers;

  bool is_ringoid() const { return fibers.has_value(); }
  int plus(int a, int b) const {
    return fibers->add[static_cast<std::size_t>(a) * total.elements.size() + b];
  }
  std::vector<IndexSet> fiber_lists() const;
};

using FiniteRingoidBundle = FiniteBundle;

struct BundleLawResult {
  std::string law;
  std::optional<Violation> violation;
};

// One entry per bundle law group, in a fixed order.  Groups after a failed
// structural group are reported as NotEvaluated.
std::vector<BundleLawResult> bundle_law_results(const FiniteBundle& b, bool ringoid);

Checked<FiniteBundle> validate_bundle(FiniteBundle candidate);
Checked<FiniteBundle> validate_ringoid_bundle(FiniteBundle candidate);

struct AdditiveTables {
  std::vector<int> add;
  std::vector<int> neg;
  int zero = 0;
};

// Scalars for a quasi-Cartan pair: a commutative ring R and an action table
// R x A -> A.
struct ScalarAction {
  FiniteRing ring;
  std::vector<int> act;
};

// (A, S, Z, Phi).  mult may hold kUndef only on A x A pairs with neither
// factor in S, which is how a semimodule is stored.
struct StructuredData {
  std::vector<std::string> elements;
  std::vector<int> mult;
  std::optional<AdditiveTables> additive;
  IndexSet S;
  IndexSet Z;
  std::vector<int> phi;
  std::optional<ScalarAction> scalars;

  int size() const { return static_cast<int>(elements.size()); }
  bool is_ring() const { return additive.has_value(); }
  bool is_semigroup() const { return static_cast<int>(S.size()) == size(); }
  int raw_mul(int a, int b) const {
    return mult[static_cast<std::size_t>(a) * elements.size() + b];
  }
  int mul(int a, int b) const;
  int plus(int a, int b) const {
    return additive->add[static_cast<std::size_t>(a) * elements.size() + b];
  }
  int scale(int r, int a) const {
    return scalars->act[static_cast<std::size_t>(r) * elements.size() + a];
  }
  std::optional<int> index_of(const std::string& name) const;
  int at(const std::string& name) const;
};

StructuredData make_structured(const FiniteSemigroup& s, IndexSet S, IndexSet Z,
                               std::vector<int> phi);
StructuredData make_structured(const FiniteRing& r, IndexSet S, IndexSet Z,
                               std::vector<int> phi);

// Table-level sanity: closure of S and Z, Z inside S, Phi into S, products
// defined where the semimodule needs them.  Expectation laws live in axioms.
Checked<StructuredData> validate_structured(StructuredData candidate);

// The sub-structure (S, Z, Phi|S) with S as the carrier.
StructuredData restrict_to_S(const StructuredData& d);

FiniteSemigroup carrier_semigroup(const StructuredData& d);
FiniteRing carrier_ring(const StructuredData& d);

}  // namespace steindual

#endif  // STEINDUAL_CORE_HPP
