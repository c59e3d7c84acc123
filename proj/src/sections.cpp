#include "steindual/sections.hpp"

#include <algorithm>
#include <functional>

#include "steindual/relations.hpp"

namespace steindual {

IndexSet support(const FiniteBundle& b, const Section& a) {
  IndexSet out;
  for (int g = 0; g < b.base.size(); ++g)
    if (a.values[g] != b.zero[g]) out.push_back(g);
  return out;
}

bool is_section(const FiniteBundle& b, const Section& a) {
  if (static_cast<int>(a.values.size()) != b.base.size()) return false;
  for (int g = 0; g < b.base.size(); ++g)
    if (a.values[g] < 0 || a.values[g] >= b.total.size() || b.rho[a.values[g]] != g) return false;
  return true;
}

bool slice_supported(const FiniteBundle& b, const Section& a) { return is_slice(b.base, support(b, a)); }

bool unit_valued(const FiniteBundle& b, const Section& a) {
  for (int g : support(b, a))
    if (!b.total.is_unit(a.values[g])) return false;
  return true;
}

Section zero_section(const FiniteBundle& b) { return Section{b.zero}; }

Section expectation(const FiniteBundle& b, const Section& a) {
  Section out = a;
  for (int g = 0; g < b.base.size(); ++g)
    if (!b.base.cat.is_unit(g)) out.values[g] = b.zero[g];
  return out;
}

Section section_product(const FiniteBundle& b, const Section& a, const Section& c) {
  if (!slice_supported(b, a) && !slice_supported(b, c)) throw NeitherSliceSupported("neither factor is slice-supported");
  Section out = zero_section(b);
  std::vector<char> hit(static_cast<std::size_t>(b.base.size()), 0);
  IndexSet sc = support(b, c);
  for (int g : support(b, a))
    for (int h : sc) {
      int f = b.base.cat.comp(g, h);
      if (f == kUndef) continue;
      if (hit[f]++) throw ContractError("two factorisations contribute to one arrow");
      out.values[f] = b.total.comp(a.values[g], c.values[h]);
    }
  return out;
}

Section section_convolution(const FiniteBundle& b, const Section& a, const Section& c) {
  if (!b.fibers) throw ContractError("convolution needs fiber addition");
  Section out = zero_section(b);
  const int n = b.base.size();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      int f = b.base.cat.comp(g, h);
      if (f == kUndef) continue;
      out.values[f] = b.plus(out.values[f], b.total.comp(a.values[g], c.values[h]));
    }
  return out;
}

Section section_sum(const FiniteBundle& b, const Section& a, const Section& c) {
  Section out = a;
  for (int g = 0; g < b.base.size(); ++g) out.values[g] = b.plus(a.values[g], c.values[g]);
  return out;
}

std::vector<IndexSet> ordered_fibers(const FiniteBundle& b) {
  std::vector<IndexSet> fibers = b.fiber_lists();
  for (int g = 0; g < b.base.size(); ++g) {
    auto& f = fibers[g];
    auto it = std::find(f.begin(), f.end(), b.zero[g]);
    if (it != f.end()) std::rotate(f.begin(), it, it + 1);
  }
  return fibers;
}

namespace {

void guard(double count) {
  if (count > static_cast<double>(max_carrier_size())) throw TooLarge("section carrier exceeds the size limit");
}

}  // namespace

std::vector<Section> all_sections(const FiniteBundle& b) {
  auto fibers = ordered_fibers(b);
  double count = 1;
  for (const auto& f : fibers) count *= static_cast<double>(f.size());
  guard(count);
  const int n = b.base.size();
  std::vector<Section> out;
  std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
  while (true) {
    Section s;
    for (int g = 0; g < n; ++g) s.values.push_back(fibers[g][pos[g]]);
    out.push_back(std::move(s));
    int g = n - 1;
    while (g >= 0) {
      if (++pos[g] < fibers[g].size()) break;
      pos[g] = 0;
      --g;
    }
    if (g < 0) break;
  }
  return out;
}

std::vector<Section> slice_supported_sections(const FiniteBundle& b) {
  auto fibers = ordered_fibers(b);
  const int n = b.base.size();
  std::vector<Section> out;
  std::vector<char> used_s(static_cast<std::size_t>(n), 0), used_r(static_cast<std::size_t>(n), 0);
  Section cur{std::vector<int>(static_cast<std::size_t>(n), 0)};
  std::function<void(int)> rec = [&](int g) {
    if (g == n) {
      out.push_back(cur);
      guard(static_cast<double>(out.size()));
      return;
    }
    for (int v : fibers[g]) {
      if (v == b.zero[g]) {
        cur.values[g] = v;
        rec(g + 1);
        continue;
      }
      int s = b.base.cat.src[g], r = b.base.cat.rng[g];
      if (used_s[s] || used_r[r]) continue;
      used_s[s] = used_r[r] = 1;
      cur.values[g] = v;
      rec(g + 1);
      used_s[s] = used_r[r] = 0;
    }
  };
  rec(0);
  return out;
}

int SectionStructure::index_of(const Section& s) const {
  auto it = index.find(s.values);
  return it == index.end() ? kUndef : it->second;
}

std::string section_name(const FiniteBundle& b, const Section& a) {
  std::string s = "{";
  bool first = true;
  for (int g : support(b, a)) {
    if (!first) s += ",";
    first = false;
    s += b.base.cat.elements[g] + ":" + b.total.elements[a.values[g]];
  }
  return s + "}";
}

namespace {

SectionStructure assemble(const FiniteBundle& b, std::vector<Section> sections, bool ring, bool semimodule) {
  SectionStructure st;
  st.sections = std::move(sections);
  const int n = static_cast<int>(st.sections.size());
  for (int i = 0; i < n; ++i) st.index[st.sections[i].values] = i;
  StructuredData& d = st.data;
  std::vector<char> inS(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const Section& s = st.sections[i];
    d.elements.push_back(section_name(b, s));
    if (slice_supported(b, s)) {
      inS[i] = 1;
      d.S.push_back(i);
      if (unit_valued(b, s)) d.Z.push_back(i);
    }
    d.phi.push_back(st.index_of(expectation(b, s)));
  }
  d.mult.assign(static_cast<std::size_t>(n) * n, kUndef);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (ring) {
        d.mult[i * n + j] = st.index_of(section_convolution(b, st.sections[i], st.sections[j]));
      } else if (!semimodule || inS[i] || inS[j]) {
        d.mult[i * n + j] = st.index_of(section_product(b, st.sections[i], st.sections[j]));
      }
    }
  if (ring) {
    AdditiveTables t;
    t.add.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.add[i * n + j] = st.index_of(section_sum(b, st.sections[i], st.sections[j]));
    for (int i = 0; i < n; ++i) {
      Section neg = st.sections[i];
      for (auto& v : neg.values) v = b.fibers->neg[v];
      t.neg.push_back(st.index_of(neg));
    }
    t.zero = st.index_of(zero_section(b));
    d.additive = std::move(t);
  }
  return st;
}

}  // namespace

SectionStructure section_structure(const FiniteBundle& b) {
  if (b.fibers) return assemble(b, all_sections(b), true, false);
  return assemble(b, slice_supported_sections(b), false, false);
}

SectionStructure section_semimodule(const FiniteBundle& b) { return assemble(b, all_sections(b), false, true); }

AxiomReport relation_characterizations(const FiniteBundle& b, const SectionStructure& st) {
  Context ctx(st.data);
  const FiniteCategory& G = b.base.cat;
  CoreInfo core_info = core(b.total);
  std::vector<char> in_core(static_cast<std::size_t>(b.total.size()), 0);
  for (int c : core_info.arrows) in_core[c] = 1;

  AxiomReport r;
  r.profile = "relation-characterizations";
  LawCheck leq{"SupportRestriction", true, {}, ""}, dom{"SupportDomination", true, {}, ""},
      orth{"SupportOrthogonality", true, {}, ""}, orth2{"SupportOrthogonalityUnion", true, {}, ""};
  auto fail = [](LawCheck& c, int x, int y) {
    if (c.pass) {
      c.pass = false;
      c.witness = {x, y};
    }
  };
  for (int x : st.data.S) {
    const Section& a = st.sections[x];
    IndexSet sa = support(b, a);
    for (int y : st.data.S) {
      const Section& c = st.sections[y];
      IndexSet sc = support(b, c);
      bool agree = std::all_of(sa.begin(), sa.end(), [&](int g) { return a.values[g] == c.values[g]; });
      if (agree != ctx.leq(x, y)) fail(leq, x, y);
      bool inv = std::all_of(sa.begin(), sa.end(), [&](int g) { return in_core[c.values[g]] != 0; });
      if (inv != ctx.dom(x, y)) fail(dom, x, y);
      if (ctx.zero()) {
        IndexSet s1, s2, r1, r2;
        for (int g : sa) {
          s1.push_back(G.src[g]);
          r1.push_back(G.rng[g]);
        }
        for (int g : sc) {
          s2.push_back(G.src[g]);
          r2.push_back(G.rng[g]);
        }
        bool disjoint_ends = set_intersection(make_set(s1), make_set(s2)).empty() &&
                             set_intersection(make_set(r1), make_set(r2)).empty();
        if (disjoint_ends != ctx.orth(x, y)) fail(orth, x, y);
        bool union_slice = set_intersection(sa, sc).empty() && is_slice(b.base, set_union(sa, sc));
        if (union_slice != ctx.orth(x, y)) fail(orth2, x, y);
      }
    }
  }
  r.checks = {leq, dom, orth, orth2};
  return r;
}

}  // namespace steindual
