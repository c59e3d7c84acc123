#include "steindual/examples.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "steindual/relations.hpp"
#include "steindual/sections.hpp"

namespace steindual {

namespace {

void guard(double size, const std::string& what) {
  if (size > static_cast<double>(max_carrier_size())) throw TooLarge(what + " exceeds the size limit");
}

struct PartialMap {
  std::vector<int> image;  // 0-based target or -1
  bool idempotent() const {
    for (std::size_t i = 0; i < image.size(); ++i)
      if (image[i] != -1 && image[i] != static_cast<int>(i)) return false;
    return true;
  }
  int domain_mask() const {
    int m = 0;
    for (std::size_t i = 0; i < image.size(); ++i)
      if (image[i] != -1) m |= 1 << i;
    return m;
  }
};

}  // namespace

StructuredData symmetric_inverse_monoid(int n) {
  if (n < 1 || n > 4) throw TooLarge("symmetric_inverse_monoid needs 1 <= n <= 4");
  std::vector<PartialMap> maps;
  std::vector<int> cur(static_cast<std::size_t>(n), -1);
  // every partial map {0..n-1} -> {0..n-1} that is injective
  int total = 1;
  for (int i = 0; i < n; ++i) total *= (n + 1);
  guard(total, "symmetric inverse monoid");
  for (int code = 0; code < total; ++code) {
    int c = code;
    std::vector<int> img(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      img[i] = c % (n + 1) - 1;
      c /= n + 1;
      if (img[i] >= 0) {
        if (used[img[i]]) ok = false;
        used[img[i]] = 1;
      }
    }
    if (ok) maps.push_back(PartialMap{img});
  }
  std::sort(maps.begin(), maps.end(), [](const PartialMap& a, const PartialMap& b) {
    auto ka = std::make_tuple(!a.idempotent(), a.domain_mask(), a.image);
    auto kb = std::make_tuple(!b.idempotent(), b.domain_mask(), b.image);
    return ka < kb;
  });
  const int m = static_cast<int>(maps.size());
  std::map<std::vector<int>, int> pos;
  StructuredData d;
  for (int i = 0; i < m; ++i) {
    pos[maps[i].image] = i;
    std::string name;
    for (int v : maps[i].image) name += v < 0 ? '-' : static_cast<char>('1' + v);
    d.elements.push_back(name);
  }
  d.mult.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<int> img(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) {
        int y = maps[j].image[x];
        img[x] = y < 0 ? -1 : maps[i].image[y];
      }
      d.mult[i * m + j] = pos.at(img);
    }
  d.S = all_indices(m);
  for (int i = 0; i < m; ++i) {
    if (maps[i].idempotent()) d.Z.push_back(i);
    std::vector<int> fixed(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x)
      if (maps[i].image[x] == x) fixed[x] = x;
    d.phi.push_back(pos.at(fixed));
  }
  return d;
}

StructuredData powerset_algebra(int n) {
  if (n < 1 || n > 5) throw TooLarge("powerset_algebra needs 1 <= n <= 5");
  const int m = 1 << n;
  StructuredData d;
  for (int mask = 0; mask < m; ++mask) {
    std::string name = "{";
    bool first = true;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) {
        if (!first) name += ",";
        first = false;
        name += std::to_string(i + 1);
      }
    d.elements.push_back(name + "}");
  }
  d.mult.resize(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) d.mult[a * m + b] = a & b;
  d.S = all_indices(m);
  d.Z = all_indices(m);
  d.phi = all_indices(m);
  return d;
}

FiniteRing prime_field(int q) {
  if (q != 2 && q != 3 && q != 5 && q != 7) throw ContractError("prime_field supports q in {2,3,5,7}");
  FiniteRing r;
  for (int i = 0; i < q; ++i) r.elements.push_back(std::to_string(i));
  r.add.resize(static_cast<std::size_t>(q) * q);
  r.mult.resize(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a) {
    r.neg.push_back((q - a) % q);
    for (int b = 0; b < q; ++b) {
      r.add[a * q + b] = (a + b) % q;
      r.mult[a * q + b] = (a * b) % q;
    }
  }
  r.zero = 0;
  return r;
}

FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  FiniteRing r;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) r.elements.push_back("(" + a.elements[i] + "," + b.elements[j] + ")");
  r.add.resize(static_cast<std::size_t>(n) * n);
  r.mult.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    r.neg.push_back(a.neg[x / nb] * nb + b.neg[x % nb]);
    for (int y = 0; y < n; ++y) {
      r.add[x * n + y] = a.plus(x / nb, y / nb) * nb + b.plus(x % nb, y % nb);
      r.mult[x * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  r.zero = a.zero * nb + b.zero;
  return r;
}

StructuredData matrix_quasi_cartan(int n, int q) {
  if (n < 1 || n > 3 || (q != 2 && q != 3)) throw TooLarge("matrix_quasi_cartan needs n <= 3 and q in {2,3}");
  const int k = n * n;
  int size = 1;
  for (int i = 0; i < k; ++i) size *= q;
  guard(size, "matrix algebra");
  auto decode = [&](int x) {
    std::vector<int> e(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
      e[i] = x % q;
      x /= q;
    }
    return e;
  };
  auto encode = [&](const std::vector<int>& e) {
    int x = 0;
    for (int v : e) x = x * q + v;
    return x;
  };
  std::vector<std::vector<int>> mats(static_cast<std::size_t>(size));
  StructuredData d;
  for (int x = 0; x < size; ++x) {
    mats[x] = decode(x);
    std::string name;
    for (int i = 0; i < k; ++i) {
      if (i > 0 && i % n == 0) name += ";";
      name += std::to_string(mats[x][i]);
    }
    d.elements.push_back(name);
  }
  d.mult.resize(static_cast<std::size_t>(size) * size);
  AdditiveTables add;
  add.add.resize(static_cast<std::size_t>(size) * size);
  for (int x = 0; x < size; ++x) {
    std::vector<int> neg(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) neg[i] = (q - mats[x][i]) % q;
    add.neg.push_back(encode(neg));
    for (int y = 0; y < size; ++y) {
      std::vector<int> s(static_cast<std::size_t>(k)), p(static_cast<std::size_t>(k), 0);
      for (int i = 0; i < k; ++i) s[i] = (mats[x][i] + mats[y][i]) % q;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int v = 0;
          for (int l = 0; l < n; ++l) v += mats[x][i * n + l] * mats[y][l * n + j];
          p[i * n + j] = v % q;
        }
      add.add[x * size + y] = encode(s);
      d.mult[x * size + y] = encode(p);
    }
  }
  add.zero = 0;
  d.additive = std::move(add);
  for (int x = 0; x < size; ++x) {
    std::vector<int> diag(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < n; ++i) diag[i * n + i] = mats[x][i * n + i];
    d.phi.push_back(encode(diag));
  }
  ScalarAction act{prime_field(q), {}};
  for (int r = 0; r < q; ++r)
    for (int x = 0; x < size; ++x) {
      std::vector<int> e = mats[x];
      for (int& v : e) v = (v * r) % q;
      act.act.push_back(encode(e));
    }
  d.scalars = std::move(act);

  StructuredData inclusion = qc_inclusion(d);
  d.Z = inclusion.Z;
  Context qc(inclusion);
  d.S = orthospan(qc, invertible_normalisers(qc));
  return d;
}

FiniteGroupoid pair_groupoid(int n) {
  FiniteCategory c;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      c.elements.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      c.rng.push_back(i * n + i);
      c.src.push_back(j * n + j);
    }
  const int m = n * n;
  c.compose.assign(static_cast<std::size_t>(m) * m, kUndef);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a % n == b / n) c.compose[a * m + b] = (a / n) * n + b % n;
  std::vector<int> inv;
  for (int a = 0; a < m; ++a) inv.push_back((a % n) * n + a / n);
  return FiniteGroupoid{std::move(c), std::move(inv)};
}

FiniteGroupoid discrete_groupoid(int n) {
  FiniteCategory c;
  for (int i = 0; i < n; ++i) {
    c.elements.push_back(std::to_string(i + 1));
    c.src.push_back(i);
    c.rng.push_back(i);
  }
  c.compose.assign(static_cast<std::size_t>(n) * n, kUndef);
  for (int i = 0; i < n; ++i) c.compose[i * n + i] = i;
  return FiniteGroupoid{std::move(c), all_indices(n)};
}

FiniteBundle trivial_ringoid_bundle(const FiniteGroupoid& G, const FiniteRing& R) {
  auto one = R.one();
  if (!one) throw ContractError("NoUnits: the fiber ring has no unit");
  const int ng = G.size(), nr = R.size(), nc = ng * nr;
  FiniteBundle b;
  b.base = G;
  FiniteCategory& C = b.total;
  for (int g = 0; g < ng; ++g)
    for (int r = 0; r < nr; ++r) {
      C.elements.push_back(R.elements[r] + "@" + G.cat.elements[g]);
      C.src.push_back(G.cat.src[g] * nr + *one);
      C.rng.push_back(G.cat.rng[g] * nr + *one);
      b.rho.push_back(g);
    }
  C.compose.assign(static_cast<std::size_t>(nc) * nc, kUndef);
  FiberAddition f;
  f.add.assign(static_cast<std::size_t>(nc) * nc, kUndef);
  for (int x = 0; x < nc; ++x) {
    f.neg.push_back((x / nr) * nr + R.neg[x % nr]);
    for (int y = 0; y < nc; ++y) {
      int gh = G.cat.comp(x / nr, y / nr);
      if (gh != kUndef) C.compose[x * nc + y] = gh * nr + R.mul(x % nr, y % nr);
      if (x / nr == y / nr) f.add[x * nc + y] = (x / nr) * nr + R.plus(x % nr, y % nr);
    }
  }
  for (int g = 0; g < ng; ++g) b.zero.push_back(g * nr + R.zero);
  b.fibers = std::move(f);
  return b;
}

StructuredData steinberg_ring_of_groupoid(const FiniteGroupoid& G, const FiniteRing& R) {
  return section_structure(trivial_ringoid_bundle(G, R)).data;
}

StructuredData pierce_case(const FiniteRing& A) {
  const int n = A.size();
  IndexSet E;
  for (int a = 0; a < n; ++a)
    if (A.mul(a, a) == a) E.push_back(a);
  IndexSet Z;
  for (int z : E)
    if (std::all_of(E.begin(), E.end(), [&](int e) { return A.mul(z, e) == A.mul(e, z); })) Z.push_back(z);
  for (int a = 0; a < n; ++a) {
    bool fixed = std::any_of(Z.begin(), Z.end(), [&](int z) { return A.mul(z, a) == a && A.mul(a, z) == a; });
    if (!fixed) throw NotLocallyUnital("no central idempotent fixes " + A.elements[a]);
  }
  return make_structured(A, all_indices(n), Z, all_indices(n));
}

std::vector<std::string> fixture_names() { return {"I2", "POW2", "M2F2", "M2F2-S", "TRIVBUN", "PIERCE-F2xF2"}; }

StructuredData zero_semigroup() {
  StructuredData d;
  d.elements = {"0"};
  d.mult = {0};
  d.S = {0};
  d.Z = {0};
  d.phi = {0};
  return d;
}

Fixture fixture(const std::string& name) {
  if (name == "I2") return {name, Profile::SteinbergSemigroup, symmetric_inverse_monoid(2)};
  if (name == "POW2") return {name, Profile::SteinbergSemigroup, powerset_algebra(2)};
  if (name == "M2F2") return {name, Profile::SteinbergRing, matrix_quasi_cartan(2, 2)};
  if (name == "M2F2-S") return {name, Profile::SteinbergSemigroup, restrict_to_S(matrix_quasi_cartan(2, 2))};
  if (name == "TRIVBUN") return {name, Profile::AmpleRingoidBundle, trivial_ringoid_bundle(pair_groupoid(2), prime_field(2))};
  if (name == "PIERCE-F2xF2")
    return {name, Profile::SteinbergRing, pierce_case(product_ring(prime_field(2), prime_field(2)))};
  throw std::out_of_range("unknown fixture " + name);
}

}  // namespace steindual
