#include "steindual/relations.hpp"

#include <algorithm>

namespace steindual {

namespace {

std::optional<int> semimodule_zero(const StructuredData& d) {
  for (int z : d.S) {
    bool ok = true;
    for (int x = 0; x < d.size() && ok; ++x) ok = d.raw_mul(z, x) == z && d.raw_mul(x, z) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

}  // namespace

Context::Context(StructuredData data) {
  auto checked = validate_structured(data);
  if (!checked) {
    const auto& v = checked.violation();
    if (v.law == "BadShape" || v.law == "SemimoduleProductDefined" || v.law == "PhiIntoS")
      throw ContractError("structured data rejected: " + v.law + " " + v.note);
  }
  data_ = std::make_shared<const StructuredData>(std::move(data));
  const StructuredData& d = *data_;
  n_ = d.size();
  const std::size_t nn = static_cast<std::size_t>(n_);
  zero_ = semimodule_zero(d);
  inS_.assign(nn, 0);
  inZ_.assign(nn, 0);
  inD_.assign(nn, 0);
  for (int s : d.S) inS_[s] = 1;
  for (int z : d.Z) inZ_[z] = 1;
  for (int a = 0; a < n_; ++a) inD_[d.phi[a]] = 1;
  for (int a = 0; a < n_; ++a)
    if (inD_[a]) D_.push_back(a);

  // Left and right local units of each element inside Z.
  std::vector<IndexSet> lz(nn), rz(nn);
  for (int a = 0; a < n_; ++a)
    for (int z : d.Z) {
      if (d.mul(z, a) == a) lz[a].push_back(z);
      if (d.mul(a, z) == a) rz[a].push_back(z);
    }

  leq_.assign(nn * nn, 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      bool left = std::any_of(lz[a].begin(), lz[a].end(), [&](int y) { return d.mul(y, b) == a; });
      if (!left) continue;
      bool right = std::any_of(rz[a].begin(), rz[a].end(), [&](int z) { return d.mul(b, z) == a; });
      leq_[idx(a, b)] = right ? 1 : 0;
    }

  dom_.assign(nn * nn, kUndef);
  for (int b = 0; b < n_; ++b) {
    std::vector<int> cands;
    for (int s : d.S)
      if (inZ_[d.mul(b, s)] && inZ_[d.mul(s, b)]) cands.push_back(s);
    for (int a = 0; a < n_; ++a)
      for (int s : cands) {
        int as = d.mul(a, s), sa = d.mul(s, a);
        if (!inD_[as] || !inD_[sa]) continue;
        if (d.mul(d.mul(b, s), a) == a && d.mul(as, b) == a) {
          dom_[idx(a, b)] = s;
          break;
        }
      }
  }

  if (zero_) {
    const int z0 = *zero_;
    orth_.assign(nn * nn, 0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        bool left = std::any_of(lz[a].begin(), lz[a].end(), [&](int y) { return d.mul(y, b) == z0; });
        if (!left) continue;
        bool right = std::any_of(rz[a].begin(), rz[a].end(), [&](int z) { return d.mul(b, z) == z0; });
        orth_[idx(a, b)] = right ? 1 : 0;
      }
  }

  zinv_.assign(nn, {});
  for (int a = 0; a < n_; ++a) {
    for (int s : d.S) {
      int as = d.mul(a, s);
      if (!inZ_[as]) continue;
      int sa = d.mul(s, a);
      if (!inZ_[sa]) continue;
      if (d.mul(as, a) == a && d.mul(sa, s) == s) zinv_[a].push_back(s);
    }
  }
  for (int a : d.S)
    if (!zinv_[a].empty()) invertible_.push_back(a);
}

int Context::zero_or_throw() const {
  if (!zero_) throw NoZero("structure has no zero");
  return *zero_;
}

std::optional<int> Context::dom_witness(int a, int b) const {
  int s = dom_[idx(a, b)];
  if (s == kUndef) return std::nullopt;
  return s;
}

bool Context::orth(int a, int b) const {
  if (!zero_) throw NoZero("orthogonality needs a zero");
  return orth_[idx(a, b)] != 0;
}

bool Context::dominates_witnessed(int a, int s, int b) const {
  const StructuredData& d = *data_;
  if (!inS_[s]) return false;
  int as = d.mul(a, s), sa = d.mul(s, a), bs = d.mul(b, s), sb = d.mul(s, b);
  if (!inD_[as] || !inD_[sa] || !inZ_[bs] || !inZ_[sb]) return false;
  return d.mul(bs, a) == a && d.mul(as, b) == a;
}

bool restriction(const Context& ctx, int a, int b) { return ctx.leq(a, b); }
bool dominates_witnessed(const Context& ctx, int a, int s, int b) { return ctx.dominates_witnessed(a, s, b); }
std::optional<int> dominates(const Context& ctx, int a, int b) { return ctx.dom_witness(a, b); }
bool orthogonal(const Context& ctx, int a, int b) { return ctx.orth(a, b); }
IndexSet z_inverses(const Context& ctx, int a) { return ctx.zinv(a); }

IndexSet dual_set(const Context& ctx, const IndexSet& T) {
  IndexSet out;
  for (int a : ctx.data().S) {
    bool found = false;
    for (int t : T) {
      for (int s : ctx.data().S)
        if (ctx.dominates_witnessed(t, a, s)) {
          found = true;
          break;
        }
      if (found) break;
    }
    if (found) out.push_back(a);
  }
  return out;
}

IndexSet coset_dual(const Context& ctx, const IndexSet& C) {
  IndexSet out;
  for (int s : ctx.data().S) {
    bool found = false;
    for (int c : C) {
      for (int d : C)
        if (ctx.dominates_witnessed(c, s, d)) {
          found = true;
          break;
        }
      if (found) break;
    }
    if (found) out.push_back(s);
  }
  return out;
}

IndexSet up_closure(const Context& ctx, const IndexSet& T) {
  IndexSet out;
  for (int s : ctx.data().S)
    if (std::any_of(T.begin(), T.end(), [&](int t) { return ctx.dom(t, s); })) out.push_back(s);
  return out;
}

IndexSet down_set(const Context& ctx, const IndexSet& T) {
  IndexSet out;
  for (int a = 0; a < ctx.size(); ++a)
    if (std::any_of(T.begin(), T.end(), [&](int t) { return ctx.dom(a, t); })) out.push_back(a);
  return out;
}

IndexSet right_local_units(const Context& ctx, const IndexSet& T) {
  IndexSet out;
  for (int z : ctx.data().Z)
    if (std::any_of(T.begin(), T.end(), [&](int t) { return ctx.mul(t, z) == t; })) out.push_back(z);
  return out;
}

IndexSet left_local_units(const Context& ctx, const IndexSet& T) {
  IndexSet out;
  for (int z : ctx.data().Z)
    if (std::any_of(T.begin(), T.end(), [&](int t) { return ctx.mul(z, t) == t; })) out.push_back(z);
  return out;
}

namespace {

std::optional<int> least_under_leq(const Context& ctx, const IndexSet& xs) {
  for (int m : xs)
    if (std::all_of(xs.begin(), xs.end(), [&](int x) { return ctx.leq(m, x); })) return m;
  return std::nullopt;
}

}  // namespace

std::optional<Supports> supports(const Context& ctx, int a) {
  auto src = least_under_leq(ctx, right_local_units(ctx, {a}));
  auto rng = least_under_leq(ctx, left_local_units(ctx, {a}));
  if (!src || !rng) return std::nullopt;
  return Supports{*src, *rng};
}

std::optional<int> supremum(const Context& ctx, int a, int b) {
  IndexSet ub;
  for (int s : ctx.data().S)
    if (ctx.leq(a, s) && ctx.leq(b, s)) ub.push_back(s);
  return least_under_leq(ctx, ub);
}

std::optional<int> orthosupremum(const Context& ctx, int a, int b) {
  if (!ctx.orth(a, b)) throw RelationError("NotOrthogonal");
  return supremum(ctx, a, b);
}

std::optional<int> complement(const Context& ctx, int y, int z) {
  if (!ctx.in_Z(y) || !ctx.in_Z(z)) throw RelationError("NotInZ");
  if (!ctx.leq(y, z)) throw RelationError("NotRestriction");
  const int zero = ctx.zero_or_throw();
  for (int w : ctx.data().Z) {
    if (ctx.mul(y, w) != zero) continue;
    if (supremum(ctx, y, w) == std::optional<int>(z)) return w;
  }
  return std::nullopt;
}

IndexSet product_set(const Context& ctx, const IndexSet& T, const IndexSet& U) {
  std::vector<int> out;
  out.reserve(T.size() * U.size());
  for (int t : T)
    for (int u : U) out.push_back(ctx.mul(t, u));
  return make_set(std::move(out));
}

IndexSet normalizers(const Context& ctx, const IndexSet& T) {
  IndexSet out;
  for (int a = 0; a < ctx.size(); ++a)
    if (product_set(ctx, {a}, T) == product_set(ctx, T, {a})) out.push_back(a);
  return out;
}

IndexSet commutant(const Context& ctx, const IndexSet& T) {
  IndexSet out;
  for (int a = 0; a < ctx.size(); ++a)
    if (std::all_of(T.begin(), T.end(), [&](int t) { return ctx.mul(a, t) == ctx.mul(t, a); })) out.push_back(a);
  return out;
}

}  // namespace steindual
