#include "steindual/axioms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

namespace steindual {

namespace {

enum class Slot { A, S, Z, D, SDown, R, EA, ZNdag, OrthoZNdag };

class LawEnv {
 public:
  explicit LawEnv(const StructuredData& d) : ctx(d) {}

  Context ctx;
  const StructuredData& d() const { return ctx.data(); }

  const Context& qc() {
    if (!qc_) qc_ = std::make_unique<Context>(qc_inclusion(d()));
    return *qc_;
  }

  const SumClosure& closure() {
    if (!closure_) closure_ = sum_closure(d());
    return *closure_;
  }

  const IndexSet& spanned_by_normalisers() {
    if (!znspan_) znspan_ = span(d(), domain(Slot::ZNdag));
    return *znspan_;
  }

  const IndexSet& spanned_by_idempotents() {
    if (!espan_) {
      IndexSet e;
      for (int r : ctx.D())
        if (d().mul(r, r) == r) e.push_back(r);
      espan_ = span(d(), e);
    }
    return *espan_;
  }

  const IndexSet& domain(Slot s) {
    auto it = domains_.find(s);
    if (it != domains_.end()) return it->second;
    IndexSet out;
    switch (s) {
      case Slot::A: out = all_indices(d().size()); break;
      case Slot::S: out = d().S; break;
      case Slot::Z: out = d().Z; break;
      case Slot::D: out = ctx.D(); break;
      case Slot::SDown: out = down_set(ctx, d().S); break;
      case Slot::R: out = d().scalars ? all_indices(d().scalars->ring.size()) : IndexSet{}; break;
      case Slot::EA:
        for (int a = 0; a < d().size(); ++a)
          if (d().raw_mul(a, a) == a) out.push_back(a);
        break;
      case Slot::ZNdag: out = invertible_normalisers(qc()); break;
      case Slot::OrthoZNdag: out = orthospan(qc(), domain(Slot::ZNdag)); break;
    }
    return domains_.emplace(s, std::move(out)).first->second;
  }

 private:
  std::unique_ptr<Context> qc_;
  std::optional<SumClosure> closure_;
  std::optional<IndexSet> znspan_, espan_;
  std::map<Slot, IndexSet> domains_;
};

using Tuple = std::vector<int>;
using Pred = std::function<bool(LawEnv&, const Tuple&)>;

struct Law {
  std::string name;
  std::vector<Slot> slots;
  Pred holds;
};

const std::vector<Law>& registry() {
  static const std::vector<Law> laws = [] {
    std::vector<Law> v;
    auto add = [&](std::string name, std::vector<Slot> slots, Pred p) { v.push_back({std::move(name), std::move(slots), std::move(p)}); };
    using S = Slot;

    add("SemigroupCarrier", {}, [](LawEnv& e, const Tuple&) { return e.d().is_semigroup(); });
    add("ClosedS", {S::S, S::S}, [](LawEnv& e, const Tuple& t) { return e.ctx.in_S(e.ctx.mul(t[0], t[1])); });
    add("ClosedZ", {S::Z, S::Z}, [](LawEnv& e, const Tuple& t) { return e.ctx.in_Z(e.ctx.mul(t[0], t[1])); });
    add("ClosedN", {S::D, S::D}, [](LawEnv& e, const Tuple& t) { return e.ctx.in_D(e.ctx.mul(t[0], t[1])); });
    add("ZInS", {S::Z}, [](LawEnv& e, const Tuple& t) { return e.ctx.in_S(t[0]); });
    add("PhiIntoS", {S::A}, [](LawEnv& e, const Tuple& t) { return e.ctx.in_S(e.ctx.phi(t[0])); });
    add("Semimodule", {S::S, S::S, S::A}, [](LawEnv& e, const Tuple& t) {
      const Context& c = e.ctx;
      int s = t[0], u = t[1], a = t[2];
      return c.mul(c.mul(s, u), a) == c.mul(s, c.mul(u, a)) && c.mul(c.mul(s, a), u) == c.mul(s, c.mul(a, u)) &&
             c.mul(c.mul(a, s), u) == c.mul(a, c.mul(s, u));
    });
    add("Idempotent", {S::A}, [](LawEnv& e, const Tuple& t) { return e.ctx.phi(e.ctx.phi(t[0])) == e.ctx.phi(t[0]); });
    add("Homogeneous", {S::A, S::A}, [](LawEnv& e, const Tuple& t) {
      const Context& c = e.ctx;
      int pa = c.phi(t[0]), pb = c.phi(t[1]);
      int prod = c.mul(pa, pb);
      return prod == c.phi(c.mul(pa, t[1])) && prod == c.phi(c.mul(t[0], pb));
    });
    add("Shiftable", {S::A, S::S}, [](LawEnv& e, const Tuple& t) {
      const Context& c = e.ctx;
      int a = t[0], s = t[1];
      return c.mul(c.phi(c.mul(s, a)), s) == c.mul(s, c.phi(c.mul(a, s)));
    });
    add("Bistable", {S::S, S::S}, [](LawEnv& e, const Tuple& t) {
      const Context& c = e.ctx;
      int s = t[0], u = t[1];
      if (!c.in_Z(c.mul(s, u))) return true;
      return c.in_Z(c.mul(c.phi(s), u)) && c.in_Z(c.mul(s, c.phi(u)));
    });
    add("Binormal", {S::S, S::S, S::Z}, [](LawEnv& e, const Tuple& t) {
      const Context& c = e.ctx;
      int s = t[0], u = t[1], z = t[2];
      if (!c.in_Z(c.mul(s, u)) || !c.in_Z(c.mul(u, s))) return true;
      return c.in_Z(c.mul(c.mul(s, z), u));
    });
    add("Trinormal", {S::S, S::S, S::D}, [](LawEnv& e, const Tuple& t) {
      const Context& c = e.ctx;
      int s = t[0], u = t[1], n = t[2];
      if (!c.in_D(c.mul(s, u)) || !c.in_D(c.mul(u, s))) return true;
      if (c.mul(c.mul(u, s), n) != n || c.mul(n, c.mul(u, s)) != n) return true;
      return c.in_D(c.mul(c.mul(s, n), u));
    });
    add("Diagonal", {S::S, S::S, S::D}, [](LawEnv& e, const Tuple& t) {
      const Context& c = e.ctx;
      int s = t[0], u = t[1], n = t[2];
      if (!c.in_D(c.mul(s, n)) || !c.in_D(c.mul(n, u))) return true;
      return c.in_D(c.mul(c.mul(s, n), u));
    });
    add("Normal", {S::S}, [](LawEnv& e, const Tuple& t) {
      return product_set(e.ctx, {t[0]}, e.ctx.D()) == product_set(e.ctx, e.ctx.D(), {t[0]});
    });
    add("ZInRange", {S::Z}, [](LawEnv& e, const Tuple& t) { return e.ctx.in_D(t[0]); });
    add("ZCentral", {S::Z, S::D}, [](LawEnv& e, const Tuple& t) { return e.ctx.mul(t[0], t[1]) == e.ctx.mul(t[1], t[0]); });
    add("Zero", {}, [](LawEnv& e, const Tuple&) { return e.ctx.zero().has_value(); });
    add("ZIdempotent", {S::Z}, [](LawEnv& e, const Tuple& t) { return e.ctx.mul(t[0], t[0]) == t[0]; });
    add("Dominated", {S::S}, [](LawEnv& e, const Tuple& t) {
      for (int u : e.d().S)
        if (e.ctx.dom(t[0], u)) return true;
      return false;
    });
    add("Orthosuprema", {S::S, S::S}, [](LawEnv& e, const Tuple& t) {
      if (!e.ctx.zero() || !e.ctx.orth(t[0], t[1])) return true;
      return supremum(e.ctx, t[0], t[1]).has_value();
    });
    add("Distributivity", {S::Z, S::Z, S::D}, [](LawEnv& e, const Tuple& t) {
      const Context& c = e.ctx;
      int y = t[0], z = t[1], r = t[2];
      if (!c.zero() || !c.orth(y, z)) return true;
      auto j = supremum(c, y, z);
      if (!j || !c.in_Z(*j)) return false;
      auto rj = supremum(c, c.mul(r, y), c.mul(r, z));
      return rj && *rj == c.mul(r, *j);
    });
    add("Complements", {S::Z, S::Z}, [](LawEnv& e, const Tuple& t) {
      const Context& c = e.ctx;
      if (!c.zero() || !c.leq(t[0], t[1])) return true;
      return complement(c, t[0], t[1]).has_value();
    });
    add("Generates", {S::A}, [](LawEnv& e, const Tuple& t) { return contains(e.closure().members, t[0]); });
    add("Orthodirected", {S::S, S::S}, [](LawEnv& e, const Tuple& t) {
      const Context& c = e.ctx;
      if (!c.orth(t[0], t[1])) return true;
      for (int r : e.d().S)
        if (c.dom(t[0], r) && c.dom(t[1], r)) return true;
      return false;
    });
    add("Additive", {S::A, S::A}, [](LawEnv& e, const Tuple& t) {
      const StructuredData& d = e.d();
      return d.phi[d.plus(t[0], t[1])] == d.plus(d.phi[t[0]], d.phi[t[1]]);
    });
    add("ZeroInZ", {}, [](LawEnv& e, const Tuple&) { return e.ctx.in_Z(e.d().additive->zero); });
    add("Orthoadditive", {S::Z, S::Z}, [](LawEnv& e, const Tuple& t) {
      if (!e.ctx.orth(t[0], t[1])) return true;
      return e.ctx.in_Z(e.d().plus(t[0], t[1]));
    });
    add("Subtractive", {S::Z, S::Z}, [](LawEnv& e, const Tuple& t) {
      // t[0] >= t[1]
      if (!e.ctx.leq(t[1], t[0])) return true;
      return e.ctx.in_Z(e.d().plus(t[0], e.d().additive->neg[t[1]]));
    });
    add("ScalarsCommutative", {S::R, S::R}, [](LawEnv& e, const Tuple& t) {
      const FiniteRing& R = e.d().scalars->ring;
      return R.mul(t[0], t[1]) == R.mul(t[1], t[0]);
    });
    add("Algebra", {S::R, S::R, S::A, S::A}, [](LawEnv& e, const Tuple& t) {
      const StructuredData& d = e.d();
      const FiniteRing& R = d.scalars->ring;
      int r = t[0], q = t[1], a = t[2], b = t[3];
      return d.scale(r, d.plus(a, b)) == d.plus(d.scale(r, a), d.scale(r, b)) &&
             d.scale(R.plus(r, q), a) == d.plus(d.scale(r, a), d.scale(q, a)) &&
             d.scale(R.mul(r, q), a) == d.scale(r, d.scale(q, a)) &&
             d.scale(r, d.mul(a, b)) == d.mul(d.scale(r, a), b) &&
             d.scale(r, d.mul(a, b)) == d.mul(a, d.scale(r, b));
    });
    add("UnitalAction", {S::A}, [](LawEnv& e, const Tuple& t) {
      auto one = e.d().scalars->ring.one();
      return !one || e.d().scale(*one, t[0]) == t[0];
    });
    add("SpannedByNormalisers", {S::A}, [](LawEnv& e, const Tuple& t) { return contains(e.spanned_by_normalisers(), t[0]); });
    add("ZCommutative", {S::D, S::D}, [](LawEnv& e, const Tuple& t) { return e.ctx.mul(t[0], t[1]) == e.ctx.mul(t[1], t[0]); });
    add("TorsionFree", {S::R, S::EA}, [](LawEnv& e, const Tuple& t) {
      const StructuredData& d = e.d();
      int zero = d.additive->zero;
      if (d.scale(t[0], t[1]) != zero) return true;
      return t[0] == d.scalars->ring.zero || t[1] == zero;
    });
    add("ZSpannedByIdempotents", {S::D}, [](LawEnv& e, const Tuple& t) { return contains(e.spanned_by_idempotents(), t[0]); });
    add("Linear", {S::R, S::A, S::A}, [](LawEnv& e, const Tuple& t) {
      const StructuredData& d = e.d();
      int r = t[0], a = t[1], b = t[2];
      return d.phi[d.plus(a, b)] == d.plus(d.phi[a], d.phi[b]) && d.phi[d.scale(r, a)] == d.scale(r, d.phi[a]);
    });
    add("QuasiCartan", {S::ZNdag}, [](LawEnv& e, const Tuple& t) {
      const Context& q = e.qc();
      return q.leq(q.phi(t[0]), t[0]);
    });
    add("QuasiCartanOrthospan", {S::OrthoZNdag}, [](LawEnv& e, const Tuple& t) {
      const Context& q = e.qc();
      return q.leq(q.phi(t[0]), t[0]);
    });
    add("QuasiCartanOnDominated", {S::SDown}, [](LawEnv& e, const Tuple& t) { return e.ctx.leq(e.ctx.phi(t[0]), t[0]); });
    add("Leech", {S::SDown}, [](LawEnv& e, const Tuple& t) {
      const Context& c = e.ctx;
      int p = c.phi(t[0]);
      if (!c.leq(p, t[0])) return false;
      for (int r : c.D())
        if (c.leq(r, t[0]) && !c.leq(r, p)) return false;
      return true;
    });
    add("Nondegenerate", {S::A}, [](LawEnv& e, const Tuple& t) {
      const Context& c = e.ctx;
      if (!c.zero()) return false;
      if (t[0] == *c.zero()) return true;
      for (int s : e.d().S)
        if (c.phi(c.mul(t[0], s)) != *c.zero()) return true;
      return false;
    });
    return v;
  }();
  return laws;
}

const Law& law_named(std::string_view name) {
  for (const Law& l : registry())
    if (l.name == name) return l;
  throw ContractError("unknown law " + std::string(name));
}

LawCheck run_law(LawEnv& env, const Law& law) {
  LawCheck out{law.name, true, {}, ""};
  std::vector<const IndexSet*> doms;
  for (Slot s : law.slots) {
    doms.push_back(&env.domain(s));
    if (doms.back()->empty()) return out;
  }
  const std::size_t k = doms.size();
  std::vector<std::size_t> pos(k, 0);
  Tuple t(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) t[i] = (*doms[i])[pos[i]];
    if (!law.holds(env, t)) {
      out.pass = false;
      out.witness = t;
      return out;
    }
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++pos[i] < doms[i]->size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

const std::vector<std::string> kStructuredSemigroup = {"SemigroupCarrier", "ClosedS", "ClosedZ", "ZInS", "ClosedN",
                                                        "Trinormal", "Binormal", "ZInRange", "ZCentral"};
const std::vector<std::string> kWellStructuredSemimodule = {"ClosedS",   "ClosedZ",  "ZInS",     "PhiIntoS",
                                                            "Semimodule", "Idempotent", "Homogeneous", "Shiftable",
                                                            "Bistable",  "Binormal", "ZInRange", "ZCentral"};

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<std::string> well_structured_semigroup_laws() {
  std::vector<std::string> out = {"SemigroupCarrier"};
  for (const auto& l : kWellStructuredSemimodule)
    if (l != "Semimodule") out.push_back(l);
  return out;
}

AxiomReport run_profile(LawEnv& env, const std::string& profile, const std::vector<std::string>& laws) {
  AxiomReport r;
  r.profile = profile;
  for (const auto& name : laws) r.checks.push_back(run_law(env, law_named(name)));
  return r;
}

}  // namespace

std::string profile_name(Profile p) {
  switch (p) {
    case Profile::StructuredSemigroup: return "structured-semigroup";
    case Profile::WellStructuredSemigroup: return "well-structured-semigroup";
    case Profile::WellStructuredSemimodule: return "well-structured-semimodule";
    case Profile::SteinbergSemigroup: return "steinberg-semigroup";
    case Profile::SteinbergRing: return "steinberg-ring";
    case Profile::QuasiCartanPair: return "quasi-cartan-pair";
    case Profile::AmpleBundle: return "ample-bundle";
    case Profile::AmpleRingoidBundle: return "ample-ringoid-bundle";
  }
  return "";
}

std::vector<Profile> all_profiles() {
  return {Profile::StructuredSemigroup, Profile::WellStructuredSemigroup, Profile::WellStructuredSemimodule,
          Profile::SteinbergSemigroup,  Profile::SteinbergRing,           Profile::QuasiCartanPair,
          Profile::AmpleBundle,         Profile::AmpleRingoidBundle};
}

std::optional<Profile> parse_profile(std::string_view name) {
  for (Profile p : all_profiles())
    if (profile_name(p) == name) return p;
  return std::nullopt;
}

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.pass; });
}

const LawCheck* AxiomReport::find(std::string_view law) const {
  for (const auto& c : checks)
    if (c.law == law) return &c;
  for (const auto& c : extras)
    if (c.law == law) return &c;
  return nullptr;
}

std::vector<std::string> AxiomReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.law);
  return out;
}

std::vector<std::string> profile_laws(Profile profile) {
  switch (profile) {
    case Profile::StructuredSemigroup: return kStructuredSemigroup;
    case Profile::WellStructuredSemigroup: return well_structured_semigroup_laws();
    case Profile::WellStructuredSemimodule: return kWellStructuredSemimodule;
    case Profile::SteinbergSemigroup:
      return concat(well_structured_semigroup_laws(),
                    {"Zero", "ZIdempotent", "Dominated", "Orthosuprema", "Distributivity", "Complements"});
    case Profile::SteinbergRing:
      return {"ClosedS",   "ClosedZ",  "ZInS",        "PhiIntoS",    "Generates",     "Orthodirected",
              "Idempotent", "Homogeneous", "Additive", "Shiftable",   "Binormal",      "Bistable",
              "ZeroInZ",   "Orthoadditive", "Subtractive", "ZIdempotent", "ZInRange", "ZCentral"};
    case Profile::QuasiCartanPair:
      return {"ScalarsCommutative", "Algebra",     "UnitalAction", "SpannedByNormalisers", "ZCommutative",
              "TorsionFree",        "ZSpannedByIdempotents", "Idempotent", "Homogeneous", "Linear", "QuasiCartan"};
    case Profile::AmpleBundle:
      return {"TotalCategory", "BaseGroupoid", "Functor", "Surjective", "Isofibration", "ZeroSection", "CoreSurjective"};
    case Profile::AmpleRingoidBundle:
      return {"TotalCategory", "BaseGroupoid", "Functor",        "Surjective",  "Isofibration",
              "ZeroSection",   "CoreSurjective", "FiberGroups", "Distributivity"};
  }
  return {};
}

AxiomReport check_profile(const StructuredData& data, Profile profile) {
  if (profile == Profile::AmpleBundle || profile == Profile::AmpleRingoidBundle)
    throw ProfileMismatch(profile_name(profile) + " needs bundle input");
  if ((profile == Profile::SteinbergRing || profile == Profile::QuasiCartanPair) && !data.is_ring())
    throw ProfileMismatch(profile_name(profile) + " needs addition tables");
  if (profile == Profile::QuasiCartanPair && !data.scalars)
    throw ProfileMismatch("quasi-cartan-pair needs a scalar ring and action");
  LawEnv env(data);
  AxiomReport r = run_profile(env, profile_name(profile), profile_laws(profile));
  if (profile == Profile::SteinbergRing) {
    if (auto* g = const_cast<LawCheck*>(r.find("Generates")))
      g->note = "sums of at most " + std::to_string(env.closure().summands) + " elements of S";
  }
  if (profile == Profile::QuasiCartanPair) r.extras.push_back(run_law(env, law_named("QuasiCartanOrthospan")));
  return r;
}

AxiomReport check_profile(const FiniteBundle& bundle, Profile profile) {
  if (profile != Profile::AmpleBundle && profile != Profile::AmpleRingoidBundle)
    throw ProfileMismatch(profile_name(profile) + " needs structured input");
  bool ringoid = profile == Profile::AmpleRingoidBundle;
  if (ringoid && !bundle.fibers) throw ProfileMismatch("ample-ringoid-bundle needs fiber addition");
  AxiomReport r;
  r.profile = profile_name(profile);
  for (auto& res : bundle_law_results(bundle, ringoid)) {
    LawCheck c{res.law, !res.violation.has_value(), {}, ""};
    if (res.violation) {
      c.witness = res.violation->witness;
      c.note = res.violation->law + (res.violation->note.empty() ? "" : ": " + res.violation->note);
    }
    r.checks.push_back(std::move(c));
  }
  return r;
}

AxiomReport check_expectation_laws(const StructuredData& data) {
  LawEnv env(data);
  std::vector<std::string> laws = {"Idempotent", "Homogeneous", "Shiftable", "Bistable", "QuasiCartanOnDominated",
                                   "Leech",      "Nondegenerate"};
  if (data.is_ring()) laws.push_back("Additive");
  return run_profile(env, "expectation", laws);
}

bool reevaluate(const StructuredData& data, const LawCheck& check) {
  const Law& law = law_named(check.law);
  if (check.witness.size() != law.slots.size()) throw ContractError("witness arity does not match " + check.law);
  LawEnv env(data);
  for (std::size_t i = 0; i < law.slots.size(); ++i)
    if (!contains(env.domain(law.slots[i]), check.witness[i])) return false;
  return !law.holds(env, check.witness);
}

StructuredData qc_inclusion(const StructuredData& data) {
  StructuredData q = data;
  q.S = all_indices(data.size());
  IndexSet e;
  for (int a = 0; a < data.size(); ++a) {
    int p = data.phi[a];
    if (data.raw_mul(p, p) == p) e.push_back(p);
  }
  q.Z = make_set(std::move(e));
  return q;
}

IndexSet invertible_normalisers(const Context& qc) {
  IndexSet out;
  for (int t : normalizers(qc, qc.D())) out = set_union(out, qc.zinv(t));
  return out;
}

IndexSet span(const StructuredData& d, const IndexSet& B) {
  if (!d.additive || !d.scalars) throw ContractError("span needs addition and scalars");
  const int n = d.size();
  const int nr = d.scalars->ring.size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> queue = {d.additive->zero};
  seen[d.additive->zero] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (int b : B)
      for (int r = 0; r < nr; ++r) {
        int y = d.plus(x, d.scale(r, b));
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
  }
  return make_set(std::move(queue));
}

IndexSet orthospan(const Context& qc, const IndexSet& B) {
  const StructuredData& d = qc.data();
  const int n = d.size();
  const int nr = d.scalars->ring.size();
  std::vector<char> out(static_cast<std::size_t>(n), 0);
  std::vector<int> chosen;
  std::function<void(std::size_t, const std::vector<int>&)> dfs = [&](std::size_t from, const std::vector<int>& current) {
    for (int x : current) out[x] = 1;
    for (std::size_t i = from; i < B.size(); ++i) {
      int b = B[i];
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](int c) { return qc.orth(b, c) && qc.orth(c, b); });
      if (!ok) continue;
      std::vector<char> mark(static_cast<std::size_t>(n), 0);
      std::vector<int> next;
      for (int x : current)
        for (int r = 0; r < nr; ++r) {
          int y = d.plus(x, d.scale(r, b));
          if (!mark[y]) {
            mark[y] = 1;
            next.push_back(y);
          }
        }
      chosen.push_back(b);
      dfs(i + 1, next);
      chosen.pop_back();
    }
  };
  dfs(0, {d.additive->zero});
  IndexSet res;
  for (int a = 0; a < n; ++a)
    if (out[a]) res.push_back(a);
  return res;
}

SumClosure sum_closure(const StructuredData& d) {
  if (!d.additive) throw ContractError("sum closure needs addition");
  std::vector<char> in(static_cast<std::size_t>(d.size()), 0);
  IndexSet frontier = d.S;
  for (int s : d.S) in[s] = 1;
  SumClosure out;
  out.summands = 1;
  while (true) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : d.S) {
        int y = d.plus(x, s);
        if (!in[y]) {
          in[y] = 1;
          next.push_back(y);
        }
      }
    if (next.empty()) break;
    ++out.summands;
    frontier = make_set(std::move(next));
  }
  for (int a = 0; a < d.size(); ++a)
    if (in[a]) out.members.push_back(a);
  return out;
}

bool Context::well_structured() const {
  std::call_once(ws_once_, [this] { ws_ = check_profile(data(), Profile::WellStructuredSemimodule).passed(); });
  return ws_;
}

}  // namespace steindual
