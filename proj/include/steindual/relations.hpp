#ifndef STEINDUAL_RELATIONS_HPP
#define STEINDUAL_RELATIONS_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "steindual/core.hpp"

namespace steindual {

class NoZero : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RelationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A StructuredData value together with its eagerly computed relation
// matrices (restriction, domination with least-index witness,
// orthogonality) and Z-inverse sets.  Immutable once built.
class Context {
 public:
  explicit Context(StructuredData data);

  const StructuredData& data() const { return *data_; }
  int size() const { return n_; }
  std::optional<int> zero() const { return zero_; }
  int zero_or_throw() const;

  bool in_S(int a) const { return inS_[a] != 0; }
  bool in_Z(int a) const { return inZ_[a] != 0; }
  bool in_D(int a) const { return inD_[a] != 0; }
  const IndexSet& D() const { return D_; }
  int mul(int a, int b) const { return data_->mul(a, b); }
  int phi(int a) const { return data_->phi[a]; }

  bool leq(int a, int b) const { return leq_[idx(a, b)] != 0; }
  bool dom(int a, int b) const { return dom_[idx(a, b)] != kUndef; }
  std::optional<int> dom_witness(int a, int b) const;
  bool orth(int a, int b) const;
  bool dominates_witnessed(int a, int s, int b) const;

  const IndexSet& zinv(int a) const { return zinv_[a]; }
  // S-dagger: elements of S with a Z-inverse.
  const IndexSet& invertible() const { return invertible_; }

  // Lazily cached: does the data pass the well-structured semimodule laws?
  bool well_structured() const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

  std::shared_ptr<const StructuredData> data_;
  int n_;
  std::optional<int> zero_;
  std::vector<char> inS_, inZ_, inD_;
  IndexSet D_;
  std::vector<char> leq_;
  std::vector<int> dom_;
  std::vector<char> orth_;
  std::vector<IndexSet> zinv_;
  IndexSet invertible_;
  mutable std::once_flag ws_once_;
  mutable bool ws_ = false;
};

bool restriction(const Context& ctx, int a, int b);
bool dominates_witnessed(const Context& ctx, int a, int s, int b);
std::optional<int> dominates(const Context& ctx, int a, int b);
bool orthogonal(const Context& ctx, int a, int b);
IndexSet z_inverses(const Context& ctx, int a);

// T*: elements serving as a domination witness t <_a s for some t in T.
IndexSet dual_set(const Context& ctx, const IndexSet& T);
// C* for cosets: witnesses s of c <_s d with both c, d in C.
IndexSet coset_dual(const Context& ctx, const IndexSet& C);
// T^<: elements of S dominating some member of T.
IndexSet up_closure(const Context& ctx, const IndexSet& T);
// T^>: elements of the carrier dominated by some member of T.
IndexSet down_set(const Context& ctx, const IndexSet& T);
// T^Z and ^Z T.
IndexSet right_local_units(const Context& ctx, const IndexSet& T);
IndexSet left_local_units(const Context& ctx, const IndexSet& T);

struct Supports {
  int source;
  int range;
};
std::optional<Supports> supports(const Context& ctx, int a);

// Least upper bound in S under restriction, if any.
std::optional<int> supremum(const Context& ctx, int a, int b);
// As supremum, but only defined for orthogonal pairs.
std::optional<int> orthosupremum(const Context& ctx, int a, int b);
// The z-complement of y inside Z.
std::optional<int> complement(const Context& ctx, int y, int z);

IndexSet normalizers(const Context& ctx, const IndexSet& T);
IndexSet commutant(const Context& ctx, const IndexSet& T);

// Products of sets, T U = {tu}.
IndexSet product_set(const Context& ctx, const IndexSet& T, const IndexSet& U);

}  // namespace steindual

#endif  // STEINDUAL_RELATIONS_HPP
