#ifndef STEINDUAL_FILTERS_HPP
#define STEINDUAL_FILTERS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "steindual/core.hpp"
#include "steindual/relations.hpp"

namespace steindual {

class NotWellStructured : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotClosed : public std::runtime_error {
 public:
  NotClosed(int u, int v, const std::string& what) : std::runtime_error(what), u(u), v(v) {}
  int u, v;
};

struct Filter {
  IndexSet members;
  int generator = kUndef;

  bool operator==(const Filter& o) const { return members == o.members; }
};

// Filter axioms checked directly: nonempty, F = F^<, down-directed.
bool is_filter(const Context& ctx, const IndexSet& F);

// Principal reduction: the distinct sets m^< for m in S dagger that pass
// is_filter, sorted by member list.
std::vector<Filter> enumerate_filters(const Context& ctx);
// Every nonempty subset of S tested against the axioms.  |S| <= 20.
std::vector<Filter> enumerate_filters_by_subsets(const Context& ctx);

bool is_proper(const Context& ctx, const IndexSet& F);
std::vector<Filter> enumerate_ultrafilters(const Context& ctx);

struct UltrafilterGroupoid {
  std::vector<Filter> ultrafilters;
  FiniteGroupoid groupoid;  // arrow i is ultrafilters[i]
  std::vector<char> unit;
  std::vector<IndexSet> duals;

  int index_of(const IndexSet& members) const;
};

std::string filter_name(const Context& ctx, const IndexSet& F);

// Coset operations on arbitrary subsets of S.
IndexSet coset_source(const Context& ctx, const IndexSet& B);
IndexSet coset_range(const Context& ctx, const IndexSet& B);
IndexSet coset_product(const Context& ctx, const IndexSet& B, const IndexSet& C);

UltrafilterGroupoid ultrafilter_groupoid(const Context& ctx);

struct UltrafilterProperties {
  bool prime = true;
  std::optional<std::pair<int, int>> prime_witness;
  std::optional<int> phi_witness;  // u in U with Phi(u) = 0 or Phi(u) = u
  bool membership_criterion = true;
  std::optional<std::pair<int, int>> criterion_witness;  // (a, s) with s a Z-inverse of a
};

UltrafilterProperties ultrafilter_properties(const Context& ctx, const IndexSet& U);

}  // namespace steindual

#endif  // STEINDUAL_FILTERS_HPP
