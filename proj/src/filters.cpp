#include "steindual/filters.hpp"

#include <algorithm>
#include <map>

namespace steindual {

namespace {

void require_well_structured(const Context& ctx) {
  if (!ctx.well_structured()) throw NotWellStructured("filter operations need a well-structured semimodule");
}

bool directed(const Context& ctx, const IndexSet& F) {
  for (int a : F)
    for (int b : F) {
      bool found = std::any_of(F.begin(), F.end(), [&](int f) { return ctx.dom(f, a) && ctx.dom(f, b); });
      if (!found) return false;
    }
  return true;
}

std::vector<Filter> sorted_unique(std::vector<Filter> fs) {
  std::stable_sort(fs.begin(), fs.end(), [](const Filter& x, const Filter& y) { return x.members < y.members; });
  std::vector<Filter> out;
  for (auto& f : fs)
    if (out.empty() || out.back().members != f.members) out.push_back(std::move(f));
  return out;
}

}  // namespace

bool is_filter(const Context& ctx, const IndexSet& F) {
  if (F.empty()) return false;
  for (int a : F)
    if (!ctx.in_S(a)) return false;
  if (up_closure(ctx, F) != F) return false;
  return directed(ctx, F);
}

std::vector<Filter> enumerate_filters(const Context& ctx) {
  require_well_structured(ctx);
  std::vector<Filter> out;
  for (int m : ctx.invertible()) {
    IndexSet F = up_closure(ctx, {m});
    if (is_filter(ctx, F)) out.push_back(Filter{std::move(F), m});
  }
  return sorted_unique(std::move(out));
}

std::vector<Filter> enumerate_filters_by_subsets(const Context& ctx) {
  require_well_structured(ctx);
  const IndexSet& S = ctx.data().S;
  if (S.size() > 20) throw TooLarge("subset enumeration is limited to |S| <= 20");
  std::vector<Filter> out;
  const unsigned long total = 1ul << S.size();
  for (unsigned long mask = 1; mask < total; ++mask) {
    IndexSet F;
    for (std::size_t i = 0; i < S.size(); ++i)
      if (mask & (1ul << i)) F.push_back(S[i]);
    if (!is_filter(ctx, F)) continue;
    int gen = kUndef;
    for (int m : F)
      if (up_closure(ctx, {m}) == F) {
        gen = m;
        break;
      }
    out.push_back(Filter{std::move(F), gen});
  }
  return sorted_unique(std::move(out));
}

bool is_proper(const Context& ctx, const IndexSet& F) {
  auto z = ctx.zero();
  return !z || !contains(F, *z);
}

std::vector<Filter> enumerate_ultrafilters(const Context& ctx) {
  std::vector<Filter> proper;
  for (auto& f : enumerate_filters(ctx))
    if (is_proper(ctx, f.members)) proper.push_back(std::move(f));
  std::vector<Filter> out;
  for (const auto& f : proper) {
    bool maximal = std::none_of(proper.begin(), proper.end(), [&](const Filter& g) {
      return g.members.size() > f.members.size() && is_subset(f.members, g.members);
    });
    if (maximal) out.push_back(f);
  }
  return out;
}

std::string filter_name(const Context& ctx, const IndexSet& F) {
  std::string s = "{";
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (i) s += ",";
    s += ctx.data().elements[F[i]];
  }
  return s + "}";
}

IndexSet coset_source(const Context& ctx, const IndexSet& B) {
  return up_closure(ctx, product_set(ctx, coset_dual(ctx, B), B));
}

IndexSet coset_range(const Context& ctx, const IndexSet& B) {
  return up_closure(ctx, product_set(ctx, B, coset_dual(ctx, B)));
}

IndexSet coset_product(const Context& ctx, const IndexSet& B, const IndexSet& C) {
  return up_closure(ctx, product_set(ctx, B, C));
}

int UltrafilterGroupoid::index_of(const IndexSet& members) const {
  for (std::size_t i = 0; i < ultrafilters.size(); ++i)
    if (ultrafilters[i].members == members) return static_cast<int>(i);
  return kUndef;
}

UltrafilterGroupoid ultrafilter_groupoid(const Context& ctx) {
  UltrafilterGroupoid out;
  out.ultrafilters = enumerate_ultrafilters(ctx);
  const int n = static_cast<int>(out.ultrafilters.size());
  std::map<IndexSet, int> pos;
  for (int i = 0; i < n; ++i) pos[out.ultrafilters[i].members] = i;
  auto find = [&](const IndexSet& m, int u, int v, const char* what) {
    auto it = pos.find(m);
    if (it == pos.end()) throw NotClosed(u, v, std::string(what) + " is not an ultrafilter");
    return it->second;
  };
  FiniteCategory cat;
  cat.src.resize(n);
  cat.rng.resize(n);
  std::vector<int> inv(n);
  out.duals.resize(n);
  for (int i = 0; i < n; ++i) {
    const IndexSet& U = out.ultrafilters[i].members;
    cat.elements.push_back(filter_name(ctx, U));
    cat.src[i] = find(coset_source(ctx, U), i, i, "source");
    cat.rng[i] = find(coset_range(ctx, U), i, i, "range");
    out.duals[i] = coset_dual(ctx, U);
    inv[i] = find(out.duals[i], i, i, "inverse");
  }
  cat.compose.assign(static_cast<std::size_t>(n) * n, kUndef);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cat.src[i] == cat.rng[j])
        cat.compose[i * n + j] = find(coset_product(ctx, out.ultrafilters[i].members, out.ultrafilters[j].members), i, j, "product");
  auto g = validate_groupoid(std::move(cat));
  if (!g) throw NotClosed(kUndef, kUndef, "ultrafilter operations fail " + g.violation().law);
  out.groupoid = std::move(g.value());
  if (out.groupoid.inv != inv) throw NotClosed(kUndef, kUndef, "dual is not the groupoid inverse");
  out.unit.resize(n);
  for (int i = 0; i < n; ++i) out.unit[i] = out.groupoid.cat.is_unit(i) ? 1 : 0;
  return out;
}

UltrafilterProperties ultrafilter_properties(const Context& ctx, const IndexSet& U) {
  UltrafilterProperties p;
  const int zero = ctx.zero_or_throw();
  const IndexSet& dag = ctx.invertible();
  for (int a : dag) {
    for (int b : dag) {
      if (!ctx.orth(a, b)) continue;
      auto j = supremum(ctx, a, b);
      if (!j || !contains(U, *j)) continue;
      if (!contains(U, a) && !contains(U, b)) {
        p.prime = false;
        p.prime_witness = std::make_pair(a, b);
        break;
      }
    }
    if (!p.prime) break;
  }
  for (int u : U)
    if (ctx.phi(u) == zero || ctx.phi(u) == u) {
      p.phi_witness = u;
      break;
    }
  for (int a : ctx.data().S) {
    for (int s : ctx.zinv(a)) {
      bool avoids = true;
      for (int u : U)
        if (ctx.phi(ctx.mul(u, s)) == zero) avoids = false;
      if (contains(U, a) != avoids) {
        p.membership_criterion = false;
        p.criterion_witness = std::make_pair(a, s);
        break;
      }
    }
    if (!p.membership_criterion) break;
  }
  return p;
}

}  // namespace steindual
