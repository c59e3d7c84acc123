// Brute-force reference implementations.  Everything here is computed from
// the raw tables by scanning all candidate witnesses; nothing goes through
// Context or the filter/bundle modules.
#ifndef STEINDUAL_TESTS_ORACLE_HPP
#define STEINDUAL_TESTS_ORACLE_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "steindual/core.hpp"

namespace oracle {

using steindual::FiniteBundle;
using steindual::FiniteCategory;
using steindual::StructuredData;
using Set = std::vector<int>;

inline bool has(const Set& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

inline int m(const StructuredData& d, int a, int b) { return d.mul(a, b); }
inline int m(const StructuredData& d, int a, int b, int c) { return d.mul(d.mul(a, b), c); }

inline bool inS(const StructuredData& d, int x) { return has(d.S, x); }
inline bool inZ(const StructuredData& d, int x) { return has(d.Z, x); }
inline bool inD(const StructuredData& d, int x) { return has(d.phi, x); }

inline std::optional<int> zero(const StructuredData& d) {
  for (int z : d.S) {
    bool ok = true;
    for (int x = 0; x < d.size(); ++x) ok = ok && m(d, z, x) == z && m(d, x, z) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

inline bool leq(const StructuredData& d, int a, int b) {
  bool left = false, right = false;
  for (int y : d.Z) left = left || (m(d, y, a) == a && m(d, y, b) == a);
  for (int z : d.Z) right = right || (m(d, a, z) == a && m(d, b, z) == a);
  return left && right;
}

// a <_s b
inline bool dom_by(const StructuredData& d, int a, int s, int b) {
  return inS(d, s) && inD(d, m(d, a, s)) && inD(d, m(d, s, a)) && inZ(d, m(d, b, s)) && inZ(d, m(d, s, b)) &&
         m(d, b, s, a) == a && m(d, a, s, b) == a;
}

inline bool dom(const StructuredData& d, int a, int b) {
  for (int s : d.S)
    if (dom_by(d, a, s, b)) return true;
  return false;
}

inline bool orth(const StructuredData& d, int a, int b) {
  int o = *zero(d);
  bool left = false, right = false;
  for (int y : d.Z) left = left || (m(d, y, a) == a && m(d, y, b) == o);
  for (int z : d.Z) right = right || (m(d, a, z) == a && m(d, b, z) == o);
  return left && right;
}

inline Set zinv(const StructuredData& d, int a) {
  Set out;
  for (int s : d.S)
    if (inZ(d, m(d, a, s)) && inZ(d, m(d, s, a)) && m(d, a, s, a) == a && m(d, s, a, s) == s) out.push_back(s);
  return out;
}

inline Set invertible(const StructuredData& d) {
  Set out;
  for (int a : d.S)
    if (!zinv(d, a).empty()) out.push_back(a);
  return out;
}

// T^< inside S.
inline Set up(const StructuredData& d, const Set& T) {
  Set out;
  for (int s : d.S)
    for (int t : T)
      if (dom(d, t, s)) {
        out.push_back(s);
        break;
      }
  return out;
}

// T^> over the whole carrier.
inline Set down(const StructuredData& d, const Set& T) {
  Set out;
  for (int a = 0; a < d.size(); ++a)
    for (int t : T)
      if (dom(d, a, t)) {
        out.push_back(a);
        break;
      }
  return out;
}

// T* = {s in S : t <_s u for some t in T, u in S}.
inline Set star(const StructuredData& d, const Set& T) {
  Set out;
  for (int s : d.S) {
    bool hit = false;
    for (int t : T)
      for (int u : d.S) hit = hit || dom_by(d, t, s, u);
    if (hit) out.push_back(s);
  }
  return out;
}

inline bool directed(const StructuredData& d, const Set& F) {
  for (int a : F)
    for (int b : F) {
      bool meet = false;
      for (int c : F) meet = meet || (dom(d, c, a) && dom(d, c, b));
      if (!meet) return false;
    }
  return true;
}

inline bool is_filter(const StructuredData& d, const Set& F) {
  if (F.empty()) return false;
  for (int a : F)
    if (!inS(d, a)) return false;
  return up(d, F) == F && directed(d, F);
}

// Every subset of S, tested directly.
inline std::vector<Set> filters(const StructuredData& d) {
  std::vector<Set> out;
  const std::size_t k = d.S.size();
  for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
    Set F;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) F.push_back(d.S[i]);
    if (is_filter(d, F)) out.push_back(F);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool proper(const StructuredData& d, const Set& F) {
  auto z = zero(d);
  return !z || !has(F, *z);
}

inline bool subset(const Set& a, const Set& b) {
  return std::all_of(a.begin(), a.end(), [&](int x) { return has(b, x); });
}

inline std::vector<Set> ultrafilters(const StructuredData& d, const std::vector<Set>& all) {
  std::vector<Set> out;
  for (const Set& F : all) {
    if (!proper(d, F)) continue;
    bool maximal = true;
    for (const Set& G : all)
      if (G != F && proper(d, G) && subset(F, G)) maximal = false;
    if (maximal) out.push_back(F);
  }
  return out;
}

inline bool equiv(const StructuredData& d, const Set& T, int a, int b) {
  for (int s : star(d, T))
    if (d.phi[m(d, a, s)] == d.phi[m(d, b, s)] && d.phi[m(d, s, a)] == d.phi[m(d, s, b)]) return true;
  return false;
}

// rel[a*n+b] for a ~_T b.
inline std::vector<char> equiv_matrix(const StructuredData& d, const Set& T) {
  const int n = d.size();
  Set st = star(d, T);
  std::vector<char> r(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int s : st)
        if (d.phi[m(d, a, s)] == d.phi[m(d, b, s)] && d.phi[m(d, s, a)] == d.phi[m(d, s, b)]) {
          r[static_cast<std::size_t>(a) * n + b] = 1;
          break;
        }
  return r;
}

inline std::optional<int> sup(const StructuredData& d, int a, int b) {
  Set ub;
  for (int s : d.S)
    if (leq(d, a, s) && leq(d, b, s)) ub.push_back(s);
  for (int c : ub)
    if (std::all_of(ub.begin(), ub.end(), [&](int u) { return leq(d, c, u); })) return c;
  return std::nullopt;
}

// Isomorphism search between two finite categories by permutation.
inline bool categories_isomorphic(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  std::vector<int> f(static_cast<std::size_t>(n));
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = f[a.src[x]] == b.src[f[x]] && f[a.rng[x]] == b.rng[f[x]];
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        int xy = a.comp(x, y);
        int img = b.comp(f[x], f[y]);
        ok = (xy == steindual::kUndef) ? img == steindual::kUndef : img == f[xy];
      }
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

inline bool is_bisection(const FiniteCategory& g, const Set& B) {
  std::set<int> s, r;
  for (int x : B)
    if (!s.insert(g.src[x]).second || !r.insert(g.rng[x]).second) return false;
  return true;
}

// Number of slice-supported sections: nonzero values on a bisection.
inline long count_slice_sections(const FiniteBundle& b) {
  const int n = b.base.size();
  std::vector<long> fiber(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < b.total.size(); ++c) ++fiber[b.rho[c]];
  long total = 0;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    Set B;
    for (int g = 0; g < n; ++g)
      if (mask >> g & 1) B.push_back(g);
    if (!is_bisection(b.base.cat, B)) continue;
    long k = 1;
    for (int g : B) k *= fiber[g] - 1;
    total += k;
  }
  return total;
}

inline long count_all_sections(const FiniteBundle& b) {
  std::vector<long> fiber(static_cast<std::size_t>(b.base.size()), 0);
  for (int c = 0; c < b.total.size(); ++c) ++fiber[b.rho[c]];
  long k = 1;
  for (long f : fiber) k *= f;
  return k;
}

}  // namespace oracle

#endif  // STEINDUAL_TESTS_ORACLE_HPP
