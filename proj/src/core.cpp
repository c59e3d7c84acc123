#include "steindual/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace steindual {

IndexSet make_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains(const IndexSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IndexSet all_indices(int n) {
  IndexSet out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

std::size_t max_carrier_size() {
  if (const char* env = std::getenv("STEINDUAL_MAX_SIZE")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

namespace {

bool square_table(const std::vector<int>& t, std::size_t n, bool allow_undef) {
  if (t.size() != n * n) return false;
  for (int v : t) {
    if (v == kUndef && allow_undef) continue;
    if (v < 0 || static_cast<std::size_t>(v) >= n) return false;
  }
  return true;
}

Violation shape(const std::string& what) { return Violation{"BadShape", {}, what}; }

}  // namespace

std::optional<int> find_zero(int n, const std::vector<int>& mult) {
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = mult[static_cast<std::size_t>(z) * n + x] == z && mult[static_cast<std::size_t>(x) * n + z] == z;
    }
    if (ok) return z;
  }
  return std::nullopt;
}

Checked<FiniteSemigroup> validate_semigroup(std::vector<std::string> elements,
                                            std::vector<int> mult,
                                            std::optional<int> declared_zero) {
  const std::size_t n = elements.size();
  if (n == 0) return shape("semigroups are nonempty");
  if (!square_table(mult, n, false)) return shape("mult must be a total n x n table");
  const int m = static_cast<int>(n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        int ab = mult[a * n + b], bc = mult[b * n + c];
        if (mult[ab * n + c] != mult[a * n + bc]) return Violation{"NonAssociative", {a, b, c}, ""};
      }
  auto z = find_zero(m, mult);
  if (declared_zero) {
    if (*declared_zero < 0 || *declared_zero >= m || !z || *z != *declared_zero)
      return Violation{"BadZero", {*declared_zero}, z ? "absorbing element is " + elements[*z] : "no absorbing element"};
  }
  return FiniteSemigroup{std::move(elements), std::move(mult), z};
}

std::optional<int> FiniteRing::one() const {
  const int n = size();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

Checked<FiniteRing> validate_ring(FiniteRing r) {
  const std::size_t n = r.elements.size();
  if (n == 0) return shape("rings are nonempty");
  if (!square_table(r.add, n, false) || !square_table(r.mult, n, false)) return shape("add and mult must be total n x n tables");
  if (r.neg.size() != n || r.zero < 0 || static_cast<std::size_t>(r.zero) >= n) return shape("neg must have n entries and zero must be an element");
  for (int v : r.neg)
    if (v < 0 || static_cast<std::size_t>(v) >= n) return shape("neg entry out of range");
  const int m = static_cast<int>(n);
  for (int a = 0; a < m; ++a) {
    if (r.plus(r.zero, a) != a) return Violation{"AddIdentity", {a}, ""};
    if (r.plus(a, r.neg[a]) != r.zero) return Violation{"AddInverse", {a}, ""};
    for (int b = 0; b < m; ++b)
      if (r.plus(a, b) != r.plus(b, a)) return Violation{"AddCommutative", {a, b}, ""};
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        if (r.plus(r.plus(a, b), c) != r.plus(a, r.plus(b, c))) return Violation{"AddAssociative", {a, b, c}, ""};
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return Violation{"NonAssociative", {a, b, c}, ""};
        if (r.mul(a, r.plus(b, c)) != r.plus(r.mul(a, b), r.mul(a, c))) return Violation{"LeftDistributive", {a, b, c}, ""};
        if (r.mul(r.plus(a, b), c) != r.plus(r.mul(a, c), r.mul(b, c))) return Violation{"RightDistributive", {a, b, c}, ""};
      }
  return r;
}

IndexSet FiniteCategory::units() const {
  std::vector<int> u;
  for (int a = 0; a < size(); ++a) {
    u.push_back(src[a]);
    u.push_back(rng[a]);
  }
  return make_set(std::move(u));
}

Checked<FiniteCategory> validate_category(FiniteCategory c) {
  const std::size_t n = c.elements.size();
  if (c.src.size() != n || c.rng.size() != n) return shape("src and rng need one entry per arrow");
  for (std::size_t i = 0; i < n; ++i)
    if (c.src[i] < 0 || c.rng[i] < 0 || static_cast<std::size_t>(c.src[i]) >= n || static_cast<std::size_t>(c.rng[i]) >= n)
      return shape("src/rng entry out of range");
  if (!square_table(c.compose, n, true)) return shape("compose must be an n x n table with null markers");
  const int m = static_cast<int>(n);
  for (int u : c.units())
    if (c.src[u] != u || c.rng[u] != u) return Violation{"UnitsFixed", {u}, ""};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      bool defined = c.comp(a, b) != kUndef;
      if (defined != (c.src[a] == c.rng[b])) return Violation{"CompositionDomain", {a, b}, ""};
      if (defined && (c.src[c.comp(a, b)] != c.src[b] || c.rng[c.comp(a, b)] != c.rng[a]))
        return Violation{"CompositionTypes", {a, b}, ""};
    }
  for (int a = 0; a < m; ++a)
    if (c.comp(a, c.src[a]) != a || c.comp(c.rng[a], a) != a) return Violation{"UnitLaws", {a}, ""};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int ab = c.comp(a, b);
      if (ab == kUndef) continue;
      for (int d = 0; d < m; ++d) {
        int bd = c.comp(b, d);
        if (bd == kUndef) continue;
        if (c.comp(ab, d) != c.comp(a, bd)) return Violation{"NonAssociative", {a, b, d}, ""};
      }
    }
  return c;
}

CoreInfo core(const FiniteCategory& c) {
  CoreInfo info;
  info.inverse.assign(static_cast<std::size_t>(c.size()), kUndef);
  for (int a = 0; a < c.size(); ++a) {
    for (int b = 0; b < c.size(); ++b) {
      if (c.src[b] != c.rng[a] || c.rng[b] != c.src[a]) continue;
      if (c.comp(b, a) == c.src[a] && c.comp(a, b) == c.rng[a]) {
        info.inverse[a] = b;
        info.arrows.push_back(a);
        break;
      }
    }
  }
  return info;
}

Checked<FiniteGroupoid> validate_groupoid(FiniteCategory cat) {
  auto checked = validate_category(std::move(cat));
  if (!checked) return checked.violation();
  CoreInfo info = core(checked.value());
  for (int a = 0; a < checked.value().size(); ++a)
    if (info.inverse[a] == kUndef) return Violation{"NotGroupoid", {a}, "arrow has no inverse"};
  return FiniteGroupoid{std::move(checked.value()), std::move(info.inverse)};
}

bool is_slice(const FiniteGroupoid& g, const IndexSet& arrows) {
  std::vector<char> seen_s(static_cast<std::size_t>(g.size()), 0), seen_r(static_cast<std::size_t>(g.size()), 0);
  for (int a : arrows) {
    if (seen_s[g.cat.src[a]]++ || seen_r[g.cat.rng[a]]++) return false;
  }
  return true;
}

std::vector<IndexSet> FiniteBundle::fiber_lists() const {
  std::vector<IndexSet> out(static_cast<std::size_t>(base.size()));
  for (int c = 0; c < total.size(); ++c) out[rho[c]].push_back(c);
  return out;
}

namespace {

std::optional<Violation> check_shape(const FiniteBundle& b) {
  const int nc = b.total.size(), ng = b.base.size();
  if (static_cast<int>(b.rho.size()) != nc || static_cast<int>(b.zero.size()) != ng)
    return shape("rho needs one entry per total arrow, zero one per base arrow");
  for (int v : b.rho)
    if (v < 0 || v >= ng) return shape("rho entry out of range");
  for (int v : b.zero)
    if (v < 0 || v >= nc) return shape("zero entry out of range");
  return std::nullopt;
}

std::optional<Violation> check_total(const FiniteBundle& b) {
  auto tc = validate_category(b.total);
  if (tc) return std::nullopt;
  Violation v = tc.violation();
  v.law = "TotalCategory." + v.law;
  return v;
}

std::optional<Violation> check_base(const FiniteBundle& b) {
  auto bg = validate_groupoid(b.base.cat);
  if (!bg) {
    Violation v = bg.violation();
    v.law = "BaseGroupoid." + v.law;
    return v;
  }
  if (bg.value().inv != b.base.inv) return Violation{"BaseGroupoid.Inverse", {}, "inv is not the groupoid inverse"};
  return std::nullopt;
}

std::optional<Violation> check_functor(const FiniteBundle& b) {
  const FiniteCategory& C = b.total;
  const FiniteCategory& G = b.base.cat;
  const int nc = C.size();
  for (int a = 0; a < nc; ++a) {
    if (b.rho[C.src[a]] != G.src[b.rho[a]] || b.rho[C.rng[a]] != G.rng[b.rho[a]]) return Violation{"NotFunctor", {a}, "source/range not preserved"};
    for (int c = 0; c < nc; ++c) {
      int ac = C.comp(a, c);
      if (ac != kUndef && b.rho[ac] != G.comp(b.rho[a], b.rho[c])) return Violation{"NotFunctor", {a, c}, "product not preserved"};
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_surjective(const FiniteBundle& b) {
  std::vector<char> hit(static_cast<std::size_t>(b.base.size()), 0);
  for (int r : b.rho) hit[r] = 1;
  for (int g = 0; g < b.base.size(); ++g)
    if (!hit[g]) return Violation{"NotSurjective", {g}, ""};
  return std::nullopt;
}

std::optional<Violation> check_isofibration(const FiniteBundle& b) {
  const int nc = b.total.size();
  for (int a = 0; a < nc; ++a)
    for (int c = 0; c < nc; ++c)
      if (b.base.cat.comp(b.rho[a], b.rho[c]) != kUndef && b.total.comp(a, c) == kUndef) return Violation{"NotIsofibration", {a, c}, ""};
  return std::nullopt;
}

std::optional<Violation> check_zero(const FiniteBundle& b) {
  const FiniteCategory& C = b.total;
  const FiniteCategory& G = b.base.cat;
  const int nc = C.size(), ng = G.size();
  for (int g = 0; g < ng; ++g)
    if (b.rho[b.zero[g]] != g) return Violation{"ZeroLawFails", {g}, "zero section is not a section"};
  for (int a = 0; a < nc; ++a)
    for (int g = 0; g < ng; ++g) {
      if (G.src[b.rho[a]] == G.rng[g] && C.comp(a, b.zero[g]) != b.zero[G.comp(b.rho[a], g)])
        return Violation{"ZeroLawFails", {a, g}, "a 0_g != 0_(rho(a)g)"};
      if (G.src[g] == G.rng[b.rho[a]] && C.comp(b.zero[g], a) != b.zero[G.comp(g, b.rho[a])])
        return Violation{"ZeroLawFails", {g, a}, "0_g a != 0_(g rho(a))"};
    }
  return std::nullopt;
}

std::optional<Violation> check_core(const FiniteBundle& b) {
  CoreInfo info = core(b.total);
  std::vector<char> covered(static_cast<std::size_t>(b.base.size()), 0);
  for (int a : info.arrows) covered[b.rho[a]] = 1;
  for (int g = 0; g < b.base.size(); ++g)
    if (!covered[g]) return Violation{"CoreNotSurjective", {g}, ""};
  return std::nullopt;
}

std::optional<Violation> check_fiber_groups(const FiniteBundle& b) {
  if (!b.fibers) return Violation{"NoFiberAddition", {}, ""};
  const int nc = b.total.size();
  const FiberAddition& f = *b.fibers;
  if (!square_table(f.add, static_cast<std::size_t>(nc), true) || static_cast<int>(f.neg.size()) != nc)
    return shape("fiber addition tables have the wrong shape");
  for (int a = 0; a < nc; ++a) {
    if (f.neg[a] < 0 || f.neg[a] >= nc || b.rho[f.neg[a]] != b.rho[a]) return Violation{"FiberGroup.Neg", {a}, ""};
    for (int c = 0; c < nc; ++c) {
      bool same = b.rho[a] == b.rho[c];
      int s = b.plus(a, c);
      if (same != (s != kUndef)) return Violation{"FiberGroup.Domain", {a, c}, ""};
      if (same && b.rho[s] != b.rho[a]) return Violation{"FiberGroup.Closed", {a, c}, ""};
    }
  }
  for (int a = 0; a < nc; ++a) {
    int z = b.zero[b.rho[a]];
    if (b.plus(z, a) != a) return Violation{"FiberGroup.Identity", {a}, ""};
    if (b.plus(a, f.neg[a]) != z) return Violation{"FiberGroup.Inverse", {a}, ""};
  }
  for (const auto& fib : b.fiber_lists())
    for (int a : fib)
      for (int c : fib) {
        if (b.plus(a, c) != b.plus(c, a)) return Violation{"FiberGroup.Commutative", {a, c}, ""};
        for (int d : fib)
          if (b.plus(b.plus(a, c), d) != b.plus(a, b.plus(c, d))) return Violation{"FiberGroup.Associative", {a, c, d}, ""};
      }
  return std::nullopt;
}

std::optional<Violation> check_distributive(const FiniteBundle& b) {
  const FiniteCategory& C = b.total;
  const int nc = C.size();
  for (int a = 0; a < nc; ++a)
    for (int c = 0; c < nc; ++c) {
      if (b.rho[a] != b.rho[c]) continue;
      for (int d = 0; d < nc; ++d) {
        if (C.comp(a, d) != kUndef && C.comp(b.plus(a, c), d) != b.plus(C.comp(a, d), C.comp(c, d)))
          return Violation{"RightDistributive", {a, c, d}, ""};
        if (C.comp(d, a) != kUndef && C.comp(d, b.plus(a, c)) != b.plus(C.comp(d, a), C.comp(d, c)))
          return Violation{"LeftDistributive", {d, a, c}, ""};
      }
    }
  return std::nullopt;
}

using Stage = std::optional<Violation> (*)(const FiniteBundle&);

std::vector<std::pair<std::string, Stage>> stages(bool ringoid) {
  std::vector<std::pair<std::string, Stage>> out = {
      {"TotalCategory", check_total}, {"BaseGroupoid", check_base},     {"Functor", check_functor},
      {"Surjective", check_surjective}, {"Isofibration", check_isofibration}, {"ZeroSection", check_zero},
      {"CoreSurjective", check_core}};
  if (ringoid) {
    out.push_back({"FiberGroups", check_fiber_groups});
    out.push_back({"Distributivity", check_distributive});
  }
  return out;
}

}  // namespace

std::vector<BundleLawResult> bundle_law_results(const FiniteBundle& b, bool ringoid) {
  std::vector<BundleLawResult> out;
  auto bad_shape = check_shape(b);
  bool blocked = false;
  for (const auto& [name, stage] : stages(ringoid)) {
    if (bad_shape) {
      out.push_back({name, bad_shape});
      continue;
    }
    if (blocked) {
      out.push_back({name, Violation{"NotEvaluated", {}, "an earlier structural law failed"}});
      continue;
    }
    auto v = stage(b);
    // Later stages index through the tables validated by the first two.
    if (v && (name == "TotalCategory" || name == "BaseGroupoid" || name == "FiberGroups")) blocked = true;
    out.push_back({name, std::move(v)});
  }
  return out;
}

Checked<FiniteBundle> validate_bundle(FiniteBundle candidate) {
  for (auto& r : bundle_law_results(candidate, false))
    if (r.violation) return *r.violation;
  return candidate;
}

Checked<FiniteBundle> validate_ringoid_bundle(FiniteBundle candidate) {
  for (auto& r : bundle_law_results(candidate, true))
    if (r.violation) return *r.violation;
  return candidate;
}

int StructuredData::mul(int a, int b) const {
  int v = raw_mul(a, b);
  if (v == kUndef) throw ContractError("product of " + elements[a] + " and " + elements[b] + " is undefined");
  return v;
}

std::optional<int> StructuredData::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == name) return i;
  return std::nullopt;
}

int StructuredData::at(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw ContractError("no element named " + name);
  return *i;
}

StructuredData make_structured(const FiniteSemigroup& s, IndexSet S, IndexSet Z, std::vector<int> phi) {
  StructuredData d;
  d.elements = s.elements;
  d.mult = s.mult;
  d.S = make_set(std::move(S));
  d.Z = make_set(std::move(Z));
  d.phi = std::move(phi);
  return d;
}

StructuredData make_structured(const FiniteRing& r, IndexSet S, IndexSet Z, std::vector<int> phi) {
  StructuredData d;
  d.elements = r.elements;
  d.mult = r.mult;
  d.additive = AdditiveTables{r.add, r.neg, r.zero};
  d.S = make_set(std::move(S));
  d.Z = make_set(std::move(Z));
  d.phi = std::move(phi);
  return d;
}

Checked<StructuredData> validate_structured(StructuredData d) {
  const std::size_t n = d.elements.size();
  if (n == 0) return shape("carrier is empty");
  if (!square_table(d.mult, n, true)) return shape("mult must be an n x n table");
  if (d.phi.size() != n) return shape("Phi needs one entry per element");
  for (int v : d.phi)
    if (v < 0 || static_cast<std::size_t>(v) >= n) return shape("Phi entry out of range");
  if (d.S != make_set(d.S) || d.Z != make_set(d.Z)) return shape("S and Z must be sorted index sets");
  for (int v : d.S)
    if (v < 0 || static_cast<std::size_t>(v) >= n) return shape("S entry out of range");
  if (d.S.empty() || d.Z.empty()) return shape("S and Z are nonempty");
  if (d.additive) {
    const auto& t = *d.additive;
    if (!square_table(t.add, n, false) || t.neg.size() != n || t.zero < 0 || static_cast<std::size_t>(t.zero) >= n)
      return shape("addition tables have the wrong shape");
    for (int v : d.mult)
      if (v == kUndef) return shape("ring products are total");
  }
  const int m = static_cast<int>(n);
  std::vector<char> inS(n, 0);
  for (int s : d.S) inS[s] = 1;
  for (int z : d.Z)
    if (z < 0 || z >= m || !inS[z]) return Violation{"ZInS", {z}, ""};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if ((inS[a] || inS[b]) && d.raw_mul(a, b) == kUndef) return Violation{"SemimoduleProductDefined", {a, b}, ""};
  for (int s : d.S)
    for (int t : d.S)
      if (!inS[d.raw_mul(s, t)]) return Violation{"ClosedS", {s, t}, ""};
  for (int y : d.Z)
    for (int z : d.Z)
      if (!contains(d.Z, d.raw_mul(y, z))) return Violation{"ClosedZ", {y, z}, ""};
  for (int a = 0; a < m; ++a)
    if (!inS[d.phi[a]]) return Violation{"PhiIntoS", {a}, ""};
  if (d.scalars) {
    const auto& R = d.scalars->ring;
    if (d.scalars->act.size() != R.elements.size() * n) return shape("scalar action must be |R| x n");
    for (int v : d.scalars->act)
      if (v < 0 || v >= m) return shape("scalar action entry out of range");
  }
  return d;
}

StructuredData restrict_to_S(const StructuredData& d) {
  const int k = static_cast<int>(d.S.size());
  std::vector<int> pos(static_cast<std::size_t>(d.size()), kUndef);
  for (int i = 0; i < k; ++i) pos[d.S[i]] = i;
  StructuredData out;
  for (int s : d.S) out.elements.push_back(d.elements[s]);
  out.mult.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out.mult[i * k + j] = pos[d.mul(d.S[i], d.S[j])];
  out.S = all_indices(k);
  for (int z : d.Z) out.Z.push_back(pos[z]);
  out.Z = make_set(out.Z);
  for (int s : d.S) out.phi.push_back(pos[d.phi[s]]);
  return out;
}

FiniteSemigroup carrier_semigroup(const StructuredData& d) {
  if (!d.is_semigroup()) throw ContractError("carrier is a semimodule, not a semigroup");
  return FiniteSemigroup{d.elements, d.mult, find_zero(d.size(), d.mult)};
}

FiniteRing carrier_ring(const StructuredData& d) {
  if (!d.additive) throw ContractError("carrier is not a ring");
  return FiniteRing{d.elements, d.additive->add, d.additive->neg, d.additive->zero, d.mult};
}

}  // namespace steindual
