#include "steindual/duality.hpp"

#include <algorithm>
#include <map>

#include "steindual/examples.hpp"

namespace steindual {

namespace {

LawCheck pass(const std::string& law) { return LawCheck{law, true, {}, ""}; }

void fail(LawCheck& c, std::vector<int> witness, std::string note = "") {
  if (!c.pass) return;
  c.pass = false;
  c.witness = std::move(witness);
  c.note = std::move(note);
}

bool in_range(const std::vector<int>& v, int n, bool allow_undef) {
  return std::all_of(v.begin(), v.end(), [&](int x) { return (allow_undef && x == kUndef) || (x >= 0 && x < n); });
}

}  // namespace

IndexSet EtaleMorphism::domain() const {
  IndexSet out;
  for (int g = 0; g < static_cast<int>(map.size()); ++g)
    if (map[g] != kUndef) out.push_back(g);
  return out;
}

std::vector<std::pair<int, int>> pullback_pairs(const EtaleMorphism& phi, const FiniteBundle& rho) {
  std::vector<std::pair<int, int>> out;
  for (int g : phi.domain())
    for (int c = 0; c < rho.total.size(); ++c)
      if (rho.rho[c] == phi.map[g]) out.emplace_back(g, c);
  return out;
}

int pullback_index(const std::vector<std::pair<int, int>>& pairs, int g, int c) {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(g, c));
  if (it == pairs.end() || *it != std::make_pair(g, c)) return kUndef;
  return static_cast<int>(it - pairs.begin());
}

AxiomReport validate_steinberg_morphism(const SteinbergMorphism& m) {
  AxiomReport r;
  r.profile = "steinberg-morphism";
  const StructuredData& a = m.source;
  const StructuredData& b = m.target;
  LawCheck shape = pass("Shape");
  if (static_cast<int>(m.map.size()) != a.size() || !in_range(m.map, b.size(), false)) {
    fail(shape, {}, "map needs one target index per source element");
    r.checks.push_back(shape);
    return r;
  }
  if (a.is_ring() != b.is_ring()) fail(shape, {}, "source and target must both be rings or both not");
  r.checks.push_back(shape);
  if (!shape.pass) return r;
  Context ca(a), cb(b);
  const auto& pi = m.map;
  LawCheck mult = pass("Multiplicative"), add = pass("Additive"), sins = pass("SIntoS"), zinz = pass("ZIntoZ"),
           zero = pass("ZeroPreserving"), joins = pass("Joins"), phi = pass("ExpectationCompatible");
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      int xy = a.raw_mul(x, y);
      if (xy == kUndef) continue;
      int img = b.raw_mul(pi[x], pi[y]);
      if (img != pi[xy]) fail(mult, {x, y});
      if (a.is_ring() && pi[a.plus(x, y)] != b.plus(pi[x], pi[y])) fail(add, {x, y});
    }
  for (int s : a.S)
    if (!cb.in_S(pi[s])) fail(sins, {s});
  for (int z : a.Z)
    if (!cb.in_Z(pi[z])) fail(zinz, {z});
  if (ca.zero() && (!cb.zero() || pi[*ca.zero()] != *cb.zero())) fail(zero, {*ca.zero()});
  if (ca.zero() && cb.zero())
    for (int s : a.S)
      for (int t : a.S) {
        if (!ca.orth(s, t)) continue;
        auto j = supremum(ca, s, t);
        if (!j) continue;
        auto jj = supremum(cb, pi[s], pi[t]);
        if (!jj || *jj != pi[*j]) fail(joins, {s, t});
      }
  for (int x = 0; x < a.size(); ++x)
    if (pi[a.phi[x]] != b.phi[pi[x]]) fail(phi, {x});
  r.checks.insert(r.checks.end(), {mult, sins, zinz, zero, joins, phi});
  if (a.is_ring()) r.checks.push_back(add);
  return r;
}

AxiomReport validate_etale(const EtaleMorphism& phi) {
  AxiomReport r;
  r.profile = "etale-morphism";
  const FiniteCategory& Gp = phi.source.cat;
  const FiniteCategory& G = phi.target.cat;
  LawCheck shape = pass("Shape");
  if (static_cast<int>(phi.map.size()) != Gp.size() || !in_range(phi.map, G.size(), true)) {
    fail(shape, {}, "map needs one entry per source arrow");
    r.checks.push_back(shape);
    return r;
  }
  r.checks.push_back(shape);
  const auto& f = phi.map;
  LawCheck sub = pass("DomainSubgroupoid"), functor = pass("Functor"), star = pass("StarBijective");
  IndexSet dom = phi.domain();
  for (int g : dom) {
    if (f[Gp.src[g]] == kUndef || f[Gp.rng[g]] == kUndef || f[phi.source.inv[g]] == kUndef) fail(sub, {g});
    for (int h : dom) {
      int gh = Gp.comp(g, h);
      if (gh == kUndef) continue;
      if (f[gh] == kUndef) {
        fail(sub, {g, h});
        continue;
      }
      if (G.comp(f[g], f[h]) != f[gh]) fail(functor, {g, h});
    }
    if (f[Gp.src[g]] != kUndef && f[Gp.src[g]] != G.src[f[g]]) fail(functor, {g});
    if (f[Gp.rng[g]] != kUndef && f[Gp.rng[g]] != G.rng[f[g]]) fail(functor, {g});
  }
  for (int x : dom) {
    if (!Gp.is_unit(x)) continue;
    for (int side = 0; side < 2; ++side) {
      const auto& endp = side == 0 ? Gp.src : Gp.rng;
      const auto& tendp = side == 0 ? G.src : G.rng;
      std::vector<int> images;
      for (int g : dom)
        if (endp[g] == x) images.push_back(f[g]);
      IndexSet expected;
      for (int h = 0; h < G.size(); ++h)
        if (tendp[h] == f[x]) expected.push_back(h);
      std::sort(images.begin(), images.end());
      if (images != expected) fail(star, {x}, side == 0 ? "source star" : "range star");
    }
  }
  r.checks.insert(r.checks.end(), {sub, functor, star});
  return r;
}

AxiomReport validate_pierce(const PierceMorphism& p) {
  AxiomReport r = validate_etale(p.phi);
  r.profile = "pierce-morphism";
  for (auto& c : r.checks) c.law = "Phi." + c.law;
  LawCheck ends = pass("Endpoints");
  if (!same_groupoid(p.phi.source, p.target.base) || !same_groupoid(p.phi.target, p.source.base))
    fail(ends, {}, "phi must run from the base of the target bundle to the base of the source bundle");
  r.checks.push_back(ends);
  if (!r.passed()) return r;
  auto pairs = pullback_pairs(p.phi, p.source);
  LawCheck shape = pass("BetaShape");
  if (p.beta.size() != pairs.size() || !in_range(p.beta, p.target.total.size(), false)) {
    fail(shape, {}, "beta needs one total arrow per pullback pair");
    r.checks.push_back(shape);
    return r;
  }
  r.checks.push_back(shape);
  LawCheck over = pass("BetaOverBase"), functor = pass("BetaFunctor"), zero = pass("BetaZero"),
           units = pass("BetaUnits"), add = pass("BetaAdditive");
  const FiniteCategory& Gp = p.phi.source.cat;
  const FiniteBundle& src = p.source;
  const FiniteBundle& tgt = p.target;
  const int np = static_cast<int>(pairs.size());
  for (int i = 0; i < np; ++i) {
    auto [g, c] = pairs[i];
    if (tgt.rho[p.beta[i]] != g) fail(over, {i});
    if (c == src.zero[p.phi.map[g]] && p.beta[i] != tgt.zero[g]) fail(zero, {i});
    if (src.total.is_unit(c) && Gp.is_unit(g) && !tgt.total.is_unit(p.beta[i])) fail(units, {i});
    for (int j = 0; j < np; ++j) {
      auto [h, d] = pairs[j];
      int gh = Gp.comp(g, h);
      if (gh == kUndef) continue;
      int k = pullback_index(pairs, gh, src.total.comp(c, d));
      if (k == kUndef || p.beta[k] != tgt.total.comp(p.beta[i], p.beta[j])) fail(functor, {i, j});
      if (src.fibers && tgt.fibers && g == h) {
        int s = pullback_index(pairs, g, src.plus(c, d));
        if (s == kUndef || p.beta[s] != tgt.plus(p.beta[i], p.beta[j])) fail(add, {i, j});
      }
    }
  }
  r.checks.insert(r.checks.end(), {over, functor, zero, units});
  if (src.fibers && tgt.fibers) r.checks.push_back(add);
  return r;
}

std::optional<Violation> isomorphism_violation(const SteinbergMorphism& m) {
  AxiomReport r = validate_steinberg_morphism(m);
  for (const auto& c : r.checks)
    if (!c.pass) return Violation{c.law, c.witness, c.note};
  std::vector<int> pre(static_cast<std::size_t>(m.target.size()), kUndef);
  for (int a = 0; a < m.source.size(); ++a) {
    if (pre[m.map[a]] != kUndef) return Violation{"NotInjective", {pre[m.map[a]], a}, ""};
    pre[m.map[a]] = a;
  }
  for (int b = 0; b < m.target.size(); ++b)
    if (pre[b] == kUndef) return Violation{"NotSurjective", {b}, ""};
  Context ct(m.target);
  for (int b = 0; b < m.target.size(); ++b) {
    if (ct.in_S(b) != contains(m.source.S, pre[b])) return Violation{"SNotReflected", {b}, ""};
    if (ct.in_Z(b) != contains(m.source.Z, pre[b])) return Violation{"ZNotReflected", {b}, ""};
  }
  return std::nullopt;
}

std::optional<Violation> isomorphism_violation(const PierceMorphism& p) {
  AxiomReport r = validate_pierce(p);
  for (const auto& c : r.checks)
    if (!c.pass) return Violation{c.law, c.witness, c.note};
  const int n = p.phi.source.size();
  std::vector<int> hit(static_cast<std::size_t>(p.phi.target.size()), 0);
  for (int g = 0; g < n; ++g) {
    if (p.phi.map[g] == kUndef) return Violation{"PhiNotTotal", {g}, ""};
    if (hit[p.phi.map[g]]++) return Violation{"PhiNotInjective", {g}, ""};
  }
  for (int h = 0; h < p.phi.target.size(); ++h)
    if (!hit[h]) return Violation{"PhiNotSurjective", {h}, ""};
  std::vector<int> bhit(static_cast<std::size_t>(p.target.total.size()), 0);
  for (std::size_t i = 0; i < p.beta.size(); ++i)
    if (bhit[p.beta[i]]++) return Violation{"BetaNotInjective", {static_cast<int>(i)}, ""};
  for (int c = 0; c < p.target.total.size(); ++c)
    if (!bhit[c]) return Violation{"BetaNotSurjective", {c}, ""};
  return std::nullopt;
}

SteinbergMorphism identity_morphism(const StructuredData& d) { return {d, d, all_indices(d.size())}; }

SteinbergMorphism compose(const SteinbergMorphism& second, const SteinbergMorphism& first) {
  if (!same_structure(first.target, second.source)) throw DomainMismatch("composable morphisms must share the middle structure");
  SteinbergMorphism out{first.source, second.target, {}};
  for (int v : first.map) out.map.push_back(second.map[v]);
  return out;
}

EtaleMorphism compose(const EtaleMorphism& second, const EtaleMorphism& first) {
  if (!same_groupoid(first.target, second.source)) throw DomainMismatch("composable etale maps must share the middle groupoid");
  EtaleMorphism out{first.source, second.target, {}};
  for (int v : first.map) out.map.push_back(v == kUndef ? kUndef : second.map[v]);
  return out;
}

EtaleMorphism identity_etale(const FiniteGroupoid& g) { return {g, g, all_indices(g.size())}; }

PierceMorphism identity_pierce(const FiniteBundle& b) {
  PierceMorphism p{b, b, identity_etale(b.base), {}};
  for (auto [g, c] : pullback_pairs(p.phi, b)) p.beta.push_back(c);
  return p;
}

bool same_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  return a.cat.src == b.cat.src && a.cat.rng == b.cat.rng && a.cat.compose == b.cat.compose && a.inv == b.inv;
}

bool same_bundle(const FiniteBundle& a, const FiniteBundle& b) {
  if (!same_groupoid(a.base, b.base)) return false;
  if (a.total.src != b.total.src || a.total.rng != b.total.rng || a.total.compose != b.total.compose) return false;
  if (a.rho != b.rho || a.zero != b.zero || a.fibers.has_value() != b.fibers.has_value()) return false;
  return !a.fibers || (a.fibers->add == b.fibers->add && a.fibers->neg == b.fibers->neg);
}

bool same_structure(const StructuredData& a, const StructuredData& b) {
  if (a.mult != b.mult || a.S != b.S || a.Z != b.Z || a.phi != b.phi || a.is_ring() != b.is_ring()) return false;
  return !a.is_ring() || (a.additive->add == b.additive->add && a.additive->neg == b.additive->neg);
}

FiniteBundle pullback_bundle(const EtaleMorphism& phi, const FiniteBundle& rho) {
  IndexSet dom = phi.domain();
  const int nd = static_cast<int>(dom.size());
  std::vector<int> pos(static_cast<std::size_t>(phi.source.size()), kUndef);
  for (int i = 0; i < nd; ++i) pos[dom[i]] = i;
  const FiniteCategory& Gp = phi.source.cat;
  FiniteBundle out;
  FiniteCategory& base = out.base.cat;
  base.compose.assign(static_cast<std::size_t>(nd) * nd, kUndef);
  for (int i = 0; i < nd; ++i) {
    int g = dom[i];
    base.elements.push_back(Gp.elements[g]);
    base.src.push_back(pos[Gp.src[g]]);
    base.rng.push_back(pos[Gp.rng[g]]);
    out.base.inv.push_back(pos[phi.source.inv[g]]);
    for (int j = 0; j < nd; ++j) {
      int gh = Gp.comp(g, dom[j]);
      if (gh != kUndef) base.compose[i * nd + j] = pos[gh];
    }
  }
  auto pairs = pullback_pairs(phi, rho);
  const int np = static_cast<int>(pairs.size());
  FiniteCategory& C = out.total;
  C.compose.assign(static_cast<std::size_t>(np) * np, kUndef);
  for (int i = 0; i < np; ++i) {
    auto [g, c] = pairs[i];
    C.elements.push_back(Gp.elements[g] + "|" + rho.total.elements[c]);
    C.src.push_back(pullback_index(pairs, Gp.src[g], rho.total.src[c]));
    C.rng.push_back(pullback_index(pairs, Gp.rng[g], rho.total.rng[c]));
    out.rho.push_back(pos[g]);
    for (int j = 0; j < np; ++j) {
      auto [h, d] = pairs[j];
      int gh = Gp.comp(g, h);
      if (gh != kUndef) C.compose[i * np + j] = pullback_index(pairs, gh, rho.total.comp(c, d));
    }
  }
  for (int g : dom) out.zero.push_back(pullback_index(pairs, g, rho.zero[phi.map[g]]));
  if (rho.fibers) {
    FiberAddition f;
    f.add.assign(static_cast<std::size_t>(np) * np, kUndef);
    for (int i = 0; i < np; ++i) {
      auto [g, c] = pairs[i];
      f.neg.push_back(pullback_index(pairs, g, rho.fibers->neg[c]));
      for (int j = 0; j < np; ++j)
        if (pairs[j].first == g) f.add[i * np + j] = pullback_index(pairs, g, rho.plus(c, pairs[j].second));
    }
    out.fibers = std::move(f);
  }
  return out;
}

namespace {

int section_index(const SectionStructure& st, const Section& s) {
  int i = st.index_of(s);
  if (i == kUndef) throw ContractError("image section lies outside the section carrier");
  return i;
}

}  // namespace

SteinbergMorphism pullback_sections(const EtaleMorphism& phi, const FiniteBundle& rho) {
  SectionStructure src = section_structure(rho);
  FiniteBundle pb = pullback_bundle(phi, rho);
  SectionStructure tgt = section_structure(pb);
  auto pairs = pullback_pairs(phi, rho);
  IndexSet dom = phi.domain();
  SteinbergMorphism m{src.data, tgt.data, {}};
  for (const Section& a : src.sections) {
    Section s;
    for (int g : dom) s.values.push_back(pullback_index(pairs, g, a.values[phi.map[g]]));
    m.map.push_back(section_index(tgt, s));
  }
  return m;
}

SteinbergMorphism pushforward_sections(const PierceMorphism& p) {
  FiniteBundle pb = pullback_bundle(p.phi, p.source);
  SectionStructure src = section_structure(pb);
  SectionStructure tgt = section_structure(p.target);
  IndexSet dom = p.phi.domain();
  SteinbergMorphism m{src.data, tgt.data, {}};
  for (const Section& a : src.sections) {
    Section s = zero_section(p.target);
    for (std::size_t i = 0; i < dom.size(); ++i) s.values[dom[i]] = p.beta[a.values[i]];
    m.map.push_back(section_index(tgt, s));
  }
  return m;
}

Dual dualize(const StructuredData& d) {
  auto ctx = std::make_shared<const Context>(d);
  UltrafilterBundle ub = build_bundle(*ctx);
  return Dual{std::move(ctx), std::move(ub)};
}

Section apply_pierce(const PierceMorphism& p, const Section& a) {
  auto pairs = pullback_pairs(p.phi, p.source);
  Section out = zero_section(p.target);
  for (int g : p.phi.domain()) out.values[g] = p.beta[pullback_index(pairs, g, a.values[p.phi.map[g]])];
  return out;
}

SteinbergMorphism functor_S(const PierceMorphism& p) {
  SectionStructure src = section_structure(p.source);
  SectionStructure tgt = section_structure(p.target);
  SteinbergMorphism m{src.data, tgt.data, {}};
  for (const Section& a : src.sections) m.map.push_back(section_index(tgt, apply_pierce(p, a)));
  return m;
}

EtaleMorphism induced_groupoid_map(const SteinbergMorphism& m, const Dual& src, const Dual& tgt) {
  EtaleMorphism phi{tgt.ub.base.groupoid, src.ub.base.groupoid, {}};
  for (const Filter& U : tgt.ub.base.ultrafilters) {
    IndexSet pre;
    for (int a : m.source.S)
      if (contains(U.members, m.map[a])) pre.push_back(a);
    if (pre.empty()) {
      phi.map.push_back(kUndef);
      continue;
    }
    int v = src.ub.base.index_of(up_closure(*src.ctx, pre));
    if (v == kUndef) throw NotUltrafilter("preimage closure of " + filter_name(*tgt.ctx, U.members) + " is not an ultrafilter");
    phi.map.push_back(v);
  }
  return phi;
}

PierceMorphism functor_U(const SteinbergMorphism& m, const Dual& src, const Dual& tgt) {
  PierceMorphism p{tgt.ub.bundle, src.ub.bundle, induced_groupoid_map(m, src, tgt), {}};
  for (auto [u2, x] : pullback_pairs(p.phi, p.source)) {
    auto [u, canon] = src.ub.arrow[x];
    const IndexSet* cls = nullptr;
    for (const IndexSet& c : src.ub.classes[u])
      if (c.front() == canon) cls = &c;
    int value = tgt.ub.class_of[u2][m.map[canon]];
    for (int a : *cls)
      if (tgt.ub.class_of[u2][m.map[a]] != value)
        throw IllDefined("image of class " + src.ub.bundle.total.elements[x] + " depends on the representative");
    p.beta.push_back(value);
  }
  return p;
}

PierceMorphism functor_U(const SteinbergMorphism& m) { return functor_U(m, dualize(m.source), dualize(m.target)); }

PierceMorphism compose_pierce(const PierceMorphism& p2, const PierceMorphism& p1) {
  if (!same_bundle(p2.source, p1.target)) throw DomainMismatch("composable Pierce morphisms must share the middle bundle");
  PierceMorphism out{p2.target, p1.source, compose(p1.phi, p2.phi), {}};
  auto pairs1 = pullback_pairs(p1.phi, p1.source);
  auto pairs2 = pullback_pairs(p2.phi, p2.source);
  for (auto [g2, b] : pullback_pairs(out.phi, out.source)) {
    int mid = p1.beta[pullback_index(pairs1, p2.phi.map[g2], b)];
    out.beta.push_back(p2.beta[pullback_index(pairs2, g2, mid)]);
  }
  return out;
}

namespace {

SectionStructure dual_sections(const Dual& dual) {
  const StructuredData& d = dual.ctx->data();
  if (d.is_ring() || d.is_semigroup()) return section_structure(dual.ub.bundle);
  return section_semimodule(dual.ub.bundle);
}

}  // namespace

SteinbergMorphism eta(const Dual& dual) {
  SectionStructure st = dual_sections(dual);
  SteinbergMorphism m{dual.ctx->data(), st.data, {}};
  for (int a = 0; a < dual.ctx->size(); ++a) m.map.push_back(st.index_of(hat(dual.ub, a)));
  if (std::find(m.map.begin(), m.map.end(), kUndef) != m.map.end())
    throw ContractError("a hat section lies outside the section carrier");
  return m;
}

SteinbergMorphism eta(const StructuredData& d) { return eta(dualize(d)); }

Epsilon epsilon(const FiniteBundle& rho) {
  SectionStructure st = section_structure(rho);
  Dual dual = dualize(st.data);
  CoreInfo info = core(rho.total);
  std::vector<char> in_core(static_cast<std::size_t>(rho.total.size()), 0);
  for (int c : info.arrows) in_core[c] = 1;
  EtaleMorphism phi{rho.base, dual.ub.base.groupoid, {}};
  for (int g = 0; g < rho.base.size(); ++g) {
    IndexSet U;
    for (int a : st.data.S)
      if (in_core[st.sections[a].values[g]]) U.push_back(a);
    int u = dual.ub.base.index_of(U);
    if (u == kUndef) throw NotUltrafilter("sections invertible at " + rho.base.cat.elements[g] + " do not form an ultrafilter");
    phi.map.push_back(u);
  }
  PierceMorphism p{rho, dual.ub.bundle, std::move(phi), {}};
  for (auto [g, x] : pullback_pairs(p.phi, p.source)) {
    auto [u, canon] = dual.ub.arrow[x];
    int value = st.sections[canon].values[g];
    for (const IndexSet& cls : dual.ub.classes[u]) {
      if (cls.front() != canon) continue;
      for (int a : cls)
        if (st.sections[a].values[g] != value) throw IllDefined("evaluation depends on the representative");
    }
    p.beta.push_back(value);
  }
  return Epsilon{std::move(st), std::move(dual), std::move(p)};
}

AxiomReport check_naturality(const SteinbergMorphism& m) {
  Dual src = dualize(m.source), tgt = dualize(m.target);
  PierceMorphism P = functor_U(m, src, tgt);
  LawCheck eta_law = pass("EtaNaturality");
  for (int a = 0; a < m.source.size(); ++a)
    if (hat(tgt.ub, m.map[a]) != apply_pierce(P, hat(src.ub, a))) fail(eta_law, {a});
  AxiomReport r = check_naturality(P);
  r.profile = "naturality";
  r.checks.insert(r.checks.begin(), eta_law);
  return r;
}

AxiomReport check_naturality(const PierceMorphism& p) {
  Epsilon es = epsilon(p.source), et = epsilon(p.target);
  PierceMorphism left = compose_pierce(p, es.morphism);
  SteinbergMorphism Sp = functor_S(p);
  PierceMorphism USp = functor_U(Sp, es.dual, et.dual);
  PierceMorphism right = compose_pierce(et.morphism, USp);
  AxiomReport r;
  r.profile = "naturality";
  LawCheck groupoid = pass("EpsilonGroupoidNaturality"), bundle = pass("EpsilonBundleNaturality");
  for (std::size_t g = 0; g < left.phi.map.size(); ++g)
    if (left.phi.map[g] != right.phi.map[g]) fail(groupoid, {static_cast<int>(g)});
  auto lp = pullback_pairs(left.phi, left.source), rp = pullback_pairs(right.phi, right.source);
  for (std::size_t i = 0; i < lp.size(); ++i) {
    int j = pullback_index(rp, lp[i].first, lp[i].second);
    if (j == kUndef || right.beta[j] != left.beta[i]) fail(bundle, {lp[i].first, lp[i].second});
  }
  if (lp.size() != rp.size()) fail(bundle, {}, "pullbacks differ in size");
  r.checks = {groupoid, bundle};
  return r;
}

namespace {

int named(const StructuredData& d, const std::string& name) {
  auto i = d.index_of(name);
  if (!i) throw ContractError("fixture lacks element " + name);
  return *i;
}

}  // namespace

// f goes to the 0/1 matrix with a 1 at (f(i), i).
SteinbergMorphism i2_to_m2f2s() {
  StructuredData a = fixture("I2").data();
  StructuredData b = fixture("M2F2-S").data();
  SteinbergMorphism m{a, b, {}};
  for (const std::string& f : a.elements) {
    std::string M = "00;00";
    for (int i = 0; i < 2; ++i)
      if (f[i] != '-') M[(f[i] - '1') * 3 + i] = '1';
    m.map.push_back(named(b, M));
  }
  return m;
}

SteinbergMorphism pow2_to_i2() {
  StructuredData a = fixture("POW2").data();
  StructuredData b = fixture("I2").data();
  const std::map<std::string, std::string> image{{"{}", "--"}, {"{1}", "1-"}, {"{2}", "-2"}, {"{1,2}", "12"}};
  SteinbergMorphism m{a, b, {}};
  for (const std::string& e : a.elements) m.map.push_back(named(b, image.at(e)));
  return m;
}

SteinbergMorphism zero_morphism(const StructuredData& source, const StructuredData& target) {
  Context ct(target);
  int z = ct.zero_or_throw();
  return SteinbergMorphism{source, target, std::vector<int>(static_cast<std::size_t>(source.size()), z)};
}

}  // namespace steindual
