#include "steindual/bundles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace steindual {

bool equivalent_right(const Context& ctx, int a, int b, const IndexSet& F) {
  for (int s : dual_set(ctx, F))
    if (ctx.phi(ctx.mul(a, s)) == ctx.phi(ctx.mul(b, s))) return true;
  return false;
}

bool equivalent_left(const Context& ctx, int a, int b, const IndexSet& F) {
  for (int s : dual_set(ctx, F))
    if (ctx.phi(ctx.mul(s, a)) == ctx.phi(ctx.mul(s, b))) return true;
  return false;
}

bool equivalent(const Context& ctx, int a, int b, const IndexSet& F) {
  for (int s : dual_set(ctx, F))
    if (ctx.phi(ctx.mul(a, s)) == ctx.phi(ctx.mul(b, s)) && ctx.phi(ctx.mul(s, a)) == ctx.phi(ctx.mul(s, b))) return true;
  return false;
}

namespace {

// Partition of the carrier by the pair (Phi(as), Phi(sa)), as a label per element.
std::vector<int> signature_labels(const Context& ctx, int s) {
  const int n = ctx.size();
  std::map<std::pair<int, int>, int> ids;
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    auto key = std::make_pair(ctx.phi(ctx.mul(a, s)), ctx.phi(ctx.mul(s, a)));
    auto it = ids.try_emplace(key, static_cast<int>(ids.size())).first;
    label[a] = it->second;
  }
  return label;
}

// True when every block of fine lies inside a block of coarse.
bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
  std::map<int, int> image;
  for (std::size_t a = 0; a < fine.size(); ++a) {
    auto [it, fresh] = image.try_emplace(fine[a], coarse[a]);
    if (!fresh && it->second != coarse[a]) return false;
  }
  return true;
}

int find_root(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

std::vector<IndexSet> equivalence_classes(const Context& ctx, const IndexSet& F) {
  const int n = ctx.size();
  IndexSet duals = dual_set(ctx, F);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  // The relation is the union of the per-witness partitions.  When one of them
  // is refined by all the others, it is the whole union.
  std::vector<std::vector<int>> labels;
  for (int s : duals) labels.push_back(signature_labels(ctx, s));
  int coarsest = kUndef;
  for (std::size_t i = 0; i < labels.size() && coarsest == kUndef; ++i) {
    bool all = true;
    for (std::size_t j = 0; j < labels.size() && all; ++j) all = refines(labels[j], labels[i]);
    if (all) coarsest = static_cast<int>(i);
  }
  auto merge_by = [&](const std::vector<int>& label) {
    std::map<int, int> first;
    for (int a = 0; a < n; ++a) {
      auto [it, fresh] = first.try_emplace(label[a], a);
      if (!fresh) parent[find_root(parent, a)] = find_root(parent, it->second);
    }
  };
  if (coarsest != kUndef) {
    merge_by(labels[coarsest]);
  } else {
    for (const auto& l : labels) merge_by(l);
  }
  std::map<int, IndexSet> blocks;
  for (int a = 0; a < n; ++a) blocks[find_root(parent, a)].push_back(a);
  std::vector<IndexSet> out;
  for (auto& [root, members] : blocks) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const IndexSet& x, const IndexSet& y) { return x.front() < y.front(); });
  return out;
}

UltrafilterBundle build_bundle(const Context& ctx) {
  UltrafilterBundle ub;
  ub.base = ultrafilter_groupoid(ctx);
  const int zero = ctx.zero_or_throw();
  const StructuredData& d = ctx.data();
  const int nu = static_cast<int>(ub.base.ultrafilters.size());
  const int n = ctx.size();
  ub.classes.resize(nu);
  ub.class_of.assign(nu, std::vector<int>(static_cast<std::size_t>(n), kUndef));
  FiniteBundle& B = ub.bundle;
  B.base = ub.base.groupoid;
  for (int u = 0; u < nu; ++u) {
    const IndexSet& U = ub.base.ultrafilters[u].members;
    ub.classes[u] = equivalence_classes(ctx, U);
    for (const IndexSet& cls : ub.classes[u]) {
      int id = static_cast<int>(ub.arrow.size());
      ub.arrow.emplace_back(u, cls.front());
      for (int a : cls) ub.class_of[u][a] = id;
      B.total.elements.push_back("[" + d.elements[cls.front()] + "," + ub.base.groupoid.cat.elements[u] + "]");
      B.rho.push_back(u);
    }
  }
  const int nc = static_cast<int>(ub.arrow.size());
  for (int u = 0; u < nu; ++u) B.zero.push_back(ub.class_of[u][zero]);

  // Representatives in S and dominated by a member of the ultrafilter.
  std::vector<std::vector<int>> reps(static_cast<std::size_t>(nc));
  for (int u = 0; u < nu; ++u) {
    IndexSet below = down_set(ctx, ub.base.ultrafilters[u].members);
    for (int a : below)
      if (ctx.in_S(a)) reps[ub.class_of[u][a]].push_back(a);
  }

  const FiniteCategory& G = ub.base.groupoid.cat;
  B.total.src.resize(nc);
  B.total.rng.resize(nc);
  for (int x = 0; x < nc; ++x) {
    int u = ub.arrow[x].first;
    const IndexSet& U = ub.base.ultrafilters[u].members;
    IndexSet rz = right_local_units(ctx, U), lz = left_local_units(ctx, U);
    if (rz.empty() || lz.empty()) throw RepresentativeNotFound("ultrafilter without local units in Z");
    B.total.src[x] = ub.class_of[G.src[u]][rz.front()];
    B.total.rng[x] = ub.class_of[G.rng[u]][lz.front()];
  }
  B.total.compose.assign(static_cast<std::size_t>(nc) * nc, kUndef);
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nc; ++y) {
      auto [u, a] = ub.arrow[x];
      auto [v, b] = ub.arrow[y];
      int w = G.comp(u, v);
      if (w == kUndef) continue;
      int prod;
      if (!reps[x].empty()) {
        prod = ctx.mul(reps[x].front(), b);
      } else if (!reps[y].empty()) {
        prod = ctx.mul(a, reps[y].front());
      } else {
        throw RepresentativeNotFound("no dominated representative for " + B.total.elements[x] + " or " + B.total.elements[y]);
      }
      B.total.compose[static_cast<std::size_t>(x) * nc + y] = ub.class_of[w][prod];
    }

  if (d.is_ring()) {
    FiberAddition f;
    f.add.assign(static_cast<std::size_t>(nc) * nc, kUndef);
    f.neg.resize(nc);
    for (int u = 0; u < nu; ++u)
      for (const IndexSet& c1 : ub.classes[u]) {
        int x = ub.class_of[u][c1.front()];
        f.neg[x] = ub.class_of[u][d.additive->neg[c1.front()]];
        for (const IndexSet& c2 : ub.classes[u]) {
          int y = ub.class_of[u][c2.front()];
          int sum = ub.class_of[u][d.plus(c1.front(), c2.front())];
          for (int a : c1)
            for (int b : c2)
              if (ub.class_of[u][d.plus(a, b)] != sum) throw ContractError("fiber addition is not well defined");
          f.add[static_cast<std::size_t>(x) * nc + y] = sum;
        }
      }
    B.fibers = std::move(f);
  }

  auto checked = d.is_ring() ? validate_ringoid_bundle(B) : validate_bundle(B);
  if (!checked) throw ContractError("ultrafilter bundle fails " + checked.violation().law);
  return ub;
}

Section hat(const UltrafilterBundle& ub, int a) {
  Section s;
  for (std::size_t u = 0; u < ub.class_of.size(); ++u) s.values.push_back(ub.class_of[u][a]);
  return s;
}

}  // namespace steindual
