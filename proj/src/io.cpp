#include "steindual/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace steindual {

using json = nlohmann::json;

namespace {

std::string pad(int n) { return std::string(static_cast<std::size_t>(n), ' '); }

bool is_scalar(const json& v) { return !v.is_array() && !v.is_object(); }

std::string render(const json& v, int indent) {
  if (v.is_object()) {
    if (v.empty()) return "{}";
    std::string out = "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad(indent + 2) + json(it.key()).dump() + ": " + render(it.value(), indent + 2);
    }
    return out + "\n" + pad(indent) + "}";
  }
  if (v.is_array()) {
    if (std::all_of(v.begin(), v.end(), is_scalar)) {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].dump();
      return out + "]";
    }
    std::string out = "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ",\n" : "") + pad(indent + 2) + render(v[i], indent + 2);
    return out + "\n" + pad(indent) + "]";
  }
  return v.dump();
}

std::string render_document(const json& v) { return render(v, 0) + "\n"; }

// ---------------------------------------------------------------- emitting

json cell(int v) { return v == kUndef ? json(nullptr) : json(v); }

json vec(const std::vector<int>& v) {
  json out = json::array();
  for (int x : v) out.push_back(cell(x));
  return out;
}

json table(const std::vector<int>& flat, std::size_t cols) {
  json out = json::array();
  for (std::size_t r = 0; cols && r < flat.size() / cols; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(cell(flat[r * cols + c]));
    out.push_back(std::move(row));
  }
  return out;
}

json ring_json(const FiniteRing& r) {
  std::size_t n = r.elements.size();
  return json{{"elements", r.elements},
              {"tables", {{"add", table(r.add, n)}, {"mult", table(r.mult, n)}, {"neg", vec(r.neg)}}}};
}

json structured_json(const StructuredData& d) {
  std::size_t n = d.elements.size();
  json t{{"mult", table(d.mult, n)}};
  if (d.additive) {
    t["add"] = table(d.additive->add, n);
    t["neg"] = vec(d.additive->neg);
  }
  json maps{{"Phi", vec(d.phi)}};
  if (d.scalars) maps["scalar-action"] = json{{"ring", ring_json(d.scalars->ring)}, {"act", table(d.scalars->act, n)}};
  return json{{"kind", structure_kind(d)},
              {"elements", d.elements},
              {"tables", t},
              {"subsets", {{"S", vec(d.S)}, {"Z", vec(d.Z)}}},
              {"maps", maps}};
}

json bundle_json(const FiniteBundle& b) {
  std::size_t m = b.total.elements.size(), nb = b.base.cat.elements.size();
  json t{{"compose", table(b.total.compose, m)},
         {"src", vec(b.total.src)},
         {"rng", vec(b.total.rng)},
         {"rho", vec(b.rho)},
         {"zero", vec(b.zero)}};
  if (b.fibers) {
    t["fiber-add"] = table(b.fibers->add, m);
    t["fiber-neg"] = vec(b.fibers->neg);
  }
  json base{{"elements", b.base.cat.elements},
            {"tables",
             {{"compose", table(b.base.cat.compose, nb)},
              {"src", vec(b.base.cat.src)},
              {"rng", vec(b.base.cat.rng)},
              {"inv", vec(b.base.inv)}}}};
  return json{{"kind", bundle_kind(b)}, {"elements", b.total.elements}, {"base", base}, {"tables", t}};
}

json endpoint_json(const json& embedded, const std::optional<EndpointRef>& ref) {
  if (ref) return json{{"path", ref->path}, {"sha256", ref->sha256}};
  return embedded;
}

// ---------------------------------------------------------------- parsing

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

void allow_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) bad(path.empty() ? "document" : path, "expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) bad(join(path, it.key()), "unknown key");
}

const json& need(const json& obj, const std::string& path, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(join(path, key), "missing key");
  return *it;
}

int read_cell(const json& v, const std::string& where, int bound, bool allow_null) {
  if (v.is_null()) {
    if (!allow_null) bad(where, "null is not allowed here");
    return kUndef;
  }
  if (!v.is_number_integer()) bad(where, "expected an integer index");
  long long x = v.get<long long>();
  if (x < 0 || x >= bound) bad(where, "index " + std::to_string(x) + " out of range [0," + std::to_string(bound) + ")");
  return static_cast<int>(x);
}

std::vector<int> read_vec(const json& v, const std::string& where, std::size_t len, int bound, bool allow_null) {
  if (!v.is_array()) bad(where, "expected an array");
  if (v.size() != len) bad(where, "expected " + std::to_string(len) + " entries, found " + std::to_string(v.size()));
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_cell(v[i], where + "[" + std::to_string(i) + "]", bound, allow_null));
  return out;
}

std::vector<int> read_table(const json& v, const std::string& where, std::size_t rows, std::size_t cols, int bound,
                            bool allow_null) {
  if (!v.is_array()) bad(where, "expected an array of rows");
  if (v.size() != rows) bad(where, "expected " + std::to_string(rows) + " rows, found " + std::to_string(v.size()));
  std::vector<int> out;
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = read_vec(v[r], where + "[" + std::to_string(r) + "]", cols, bound, allow_null);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

IndexSet read_set(const json& v, const std::string& where, int bound) {
  if (!v.is_array()) bad(where, "expected an array");
  IndexSet out = read_vec(v, where, v.size(), bound, false);
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i - 1] >= out[i]) bad(where, "subset must be strictly increasing");
  return out;
}

std::vector<std::string> read_names(const json& v, const std::string& where, bool allow_empty) {
  if (!v.is_array()) bad(where, "expected an array of names");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) bad(where + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(v[i].get<std::string>());
    if (!seen.insert(out.back()).second) bad(where + "[" + std::to_string(i) + "]", "duplicate name " + out.back());
  }
  if (out.empty() && !allow_empty) bad(where, "empty carrier");
  if (out.size() > max_carrier_size()) throw TooLarge(where + ": carrier exceeds the size limit");
  return out;
}

std::map<std::string, std::string> read_metadata(const json& doc) {
  std::map<std::string, std::string> out;
  auto it = doc.find("metadata");
  if (it == doc.end()) return out;
  if (!it->is_object()) bad("metadata", "expected an object");
  for (auto m = it->begin(); m != it->end(); ++m) {
    if (!m.value().is_string()) bad("metadata." + m.key(), "expected a string");
    out[m.key()] = m.value().get<std::string>();
  }
  return out;
}

int additive_identity(const std::vector<int>& add, int n, const std::string& where) {
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = add[static_cast<std::size_t>(z) * n + x] == x && add[static_cast<std::size_t>(x) * n + z] == x;
    if (ok) return z;
  }
  bad(where, "no additive identity");
}

FiniteRing parse_ring(const json& v, const std::string& path) {
  allow_keys(v, path, {"elements", "tables"});
  FiniteRing r;
  r.elements = read_names(need(v, path, "elements"), join(path, "elements"), false);
  int n = r.size();
  std::string tp = join(path, "tables");
  const json& t = need(v, path, "tables");
  allow_keys(t, tp, {"add", "mult", "neg"});
  r.add = read_table(need(t, tp, "add"), join(tp, "add"), n, n, n, false);
  r.mult = read_table(need(t, tp, "mult"), join(tp, "mult"), n, n, n, false);
  r.neg = read_vec(need(t, tp, "neg"), join(tp, "neg"), n, n, false);
  r.zero = additive_identity(r.add, n, join(tp, "add"));
  return r;
}

StructuredData parse_structured(const json& doc, const std::string& path, const std::string& kind) {
  allow_keys(doc, path, {"kind", "elements", "tables", "subsets", "maps", "metadata"});
  StructuredData d;
  d.elements = read_names(need(doc, path, "elements"), join(path, "elements"), false);
  const int n = d.size();
  std::string tp = join(path, "tables");
  const json& t = need(doc, path, "tables");
  if (kind == "ring") {
    allow_keys(t, tp, {"mult", "add", "neg"});
  } else {
    allow_keys(t, tp, {"mult"});
  }
  d.mult = read_table(need(t, tp, "mult"), join(tp, "mult"), n, n, n, kind == "structured");
  if (kind == "ring") {
    AdditiveTables a;
    a.add = read_table(need(t, tp, "add"), join(tp, "add"), n, n, n, false);
    a.neg = read_vec(need(t, tp, "neg"), join(tp, "neg"), n, n, false);
    a.zero = additive_identity(a.add, n, join(tp, "add"));
    d.additive = std::move(a);
  }
  std::string sp = join(path, "subsets");
  const json& s = need(doc, path, "subsets");
  allow_keys(s, sp, {"S", "Z"});
  d.S = read_set(need(s, sp, "S"), join(sp, "S"), n);
  d.Z = read_set(need(s, sp, "Z"), join(sp, "Z"), n);
  std::string mp = join(path, "maps");
  const json& m = need(doc, path, "maps");
  allow_keys(m, mp, {"Phi", "scalar-action"});
  d.phi = read_vec(need(m, mp, "Phi"), join(mp, "Phi"), n, n, false);
  if (m.contains("scalar-action")) {
    std::string ap = join(mp, "scalar-action");
    const json& a = m["scalar-action"];
    allow_keys(a, ap, {"ring", "act"});
    ScalarAction act;
    act.ring = parse_ring(need(a, ap, "ring"), join(ap, "ring"));
    act.act = read_table(need(a, ap, "act"), join(ap, "act"), act.ring.size(), n, n, false);
    d.scalars = std::move(act);
  }
  return d;
}

FiniteBundle parse_bundle(const json& doc, const std::string& path, const std::string& kind) {
  allow_keys(doc, path, {"kind", "elements", "base", "tables", "metadata"});
  FiniteBundle b;
  std::string bp = join(path, "base");
  const json& base = need(doc, path, "base");
  allow_keys(base, bp, {"elements", "tables"});
  b.base.cat.elements = read_names(need(base, bp, "elements"), join(bp, "elements"), true);
  const int nb = b.base.size();
  std::string btp = join(bp, "tables");
  const json& bt = need(base, bp, "tables");
  allow_keys(bt, btp, {"compose", "src", "rng", "inv"});
  b.base.cat.compose = read_table(need(bt, btp, "compose"), join(btp, "compose"), nb, nb, nb, true);
  b.base.cat.src = read_vec(need(bt, btp, "src"), join(btp, "src"), nb, nb, false);
  b.base.cat.rng = read_vec(need(bt, btp, "rng"), join(btp, "rng"), nb, nb, false);
  b.base.inv = read_vec(need(bt, btp, "inv"), join(btp, "inv"), nb, nb, false);

  b.total.elements = read_names(need(doc, path, "elements"), join(path, "elements"), true);
  const int m = b.total.size();
  std::string tp = join(path, "tables");
  const json& t = need(doc, path, "tables");
  if (kind == "ringoid-bundle") {
    allow_keys(t, tp, {"compose", "src", "rng", "rho", "zero", "fiber-add", "fiber-neg"});
  } else {
    allow_keys(t, tp, {"compose", "src", "rng", "rho", "zero"});
  }
  b.total.compose = read_table(need(t, tp, "compose"), join(tp, "compose"), m, m, m, true);
  b.total.src = read_vec(need(t, tp, "src"), join(tp, "src"), m, m, false);
  b.total.rng = read_vec(need(t, tp, "rng"), join(tp, "rng"), m, m, false);
  b.rho = read_vec(need(t, tp, "rho"), join(tp, "rho"), m, nb, false);
  b.zero = read_vec(need(t, tp, "zero"), join(tp, "zero"), nb, m, false);
  if (kind == "ringoid-bundle") {
    FiberAddition f;
    f.add = read_table(need(t, tp, "fiber-add"), join(tp, "fiber-add"), m, m, m, true);
    f.neg = read_vec(need(t, tp, "fiber-neg"), join(tp, "fiber-neg"), m, m, false);
    b.fibers = std::move(f);
  }
  return b;
}

std::string kind_of(const json& doc, const std::string& path) {
  if (!doc.is_object()) bad(path.empty() ? "document" : path, "expected an object");
  const json& k = need(doc, path, "kind");
  if (!k.is_string()) bad(join(path, "kind"), "expected a string");
  std::string kind = k.get<std::string>();
  static const std::set<std::string> kinds{"semigroup", "ring", "structured", "bundle", "ringoid-bundle", "morphism",
                                           "pierce-morphism"};
  if (!kinds.count(kind)) bad(join(path, "kind"), "unknown kind " + kind);
  return kind;
}

StructureFile parse_doc(const json& doc, const std::filesystem::path& base_dir, int depth);

struct Endpoint {
  Document value;
  std::optional<EndpointRef> ref;
};

Endpoint parse_endpoint(const json& v, const std::string& path, const std::filesystem::path& base_dir, int depth) {
  if (!v.is_object()) bad(path, "expected an embedded document or a path reference");
  if (!v.contains("kind")) {
    allow_keys(v, path, {"path", "sha256"});
    const json& p = need(v, path, "path");
    const json& h = need(v, path, "sha256");
    if (!p.is_string() || !h.is_string()) bad(path, "path and sha256 must be strings");
    EndpointRef ref{p.get<std::string>(), h.get<std::string>()};
    std::filesystem::path file = base_dir / ref.path;
    std::string bytes;
    try {
      bytes = read_file(file);
    } catch (const std::exception& e) {
      bad(join(path, "path"), e.what());
    }
    if (sha256_hex(bytes) != ref.sha256) bad(join(path, "sha256"), "hash mismatch for " + ref.path);
    StructureFile inner;
    try {
      inner = parse_structure(bytes, file.parent_path());
    } catch (const ParseError& e) {
      bad(join(path, "path"), std::string("in ") + ref.path + ": " + e.what());
    }
    return Endpoint{std::move(inner.value), ref};
  }
  if (depth > 0) bad(path, "morphism endpoints cannot themselves be morphisms");
  StructureFile inner;
  try {
    inner = parse_doc(v, base_dir, depth + 1);
  } catch (const ParseError& e) {
    bad(path, e.what());
  }
  return Endpoint{std::move(inner.value), std::nullopt};
}

StructureFile parse_doc(const json& doc, const std::filesystem::path& base_dir, int depth) {
  StructureFile f;
  f.kind = kind_of(doc, "");
  f.metadata = read_metadata(doc);
  if (f.kind == "semigroup" || f.kind == "ring" || f.kind == "structured") {
    f.value = parse_structured(doc, "", f.kind);
  } else if (f.kind == "bundle" || f.kind == "ringoid-bundle") {
    f.value = parse_bundle(doc, "", f.kind);
  } else {
    if (depth > 0) bad("kind", "morphism endpoints cannot themselves be morphisms");
    allow_keys(doc, "", {"kind", "source", "target", "maps", "metadata"});
    Endpoint src = parse_endpoint(need(doc, "", "source"), "source", base_dir, depth);
    Endpoint tgt = parse_endpoint(need(doc, "", "target"), "target", base_dir, depth);
    f.source_ref = src.ref;
    f.target_ref = tgt.ref;
    const json& maps = need(doc, "", "maps");
    if (f.kind == "morphism") {
      allow_keys(maps, "maps", {"map"});
      auto* a = std::get_if<StructuredData>(&src.value);
      auto* b = std::get_if<StructuredData>(&tgt.value);
      if (!a || !b) bad("source", "morphism endpoints must be semigroups, rings or structured data");
      SteinbergMorphism m{*a, *b, read_vec(need(maps, "maps", "map"), "maps.map", a->size(), b->size(), false)};
      f.value = std::move(m);
    } else {
      allow_keys(maps, "maps", {"phi", "beta"});
      auto* a = std::get_if<FiniteBundle>(&src.value);
      auto* b = std::get_if<FiniteBundle>(&tgt.value);
      if (!a || !b) bad("source", "pierce-morphism endpoints must be bundles");
      PierceMorphism p{*b, *a, EtaleMorphism{b->base, a->base, {}}, {}};
      p.phi.map = read_vec(need(maps, "maps", "phi"), "maps.phi", b->base.size(), a->base.size(), true);
      auto pairs = pullback_pairs(p.phi, p.source);
      const json& beta = need(maps, "maps", "beta");
      std::vector<int> flat = read_table(beta, "maps.beta", pairs.size(), 3,
                                         std::max({b->base.size(), a->total.size(), b->total.size(), 1}), false);
      p.beta.assign(pairs.size(), kUndef);
      for (std::size_t r = 0; r < pairs.size(); ++r) {
        std::string where = "maps.beta[" + std::to_string(r) + "]";
        int idx = pullback_index(pairs, flat[3 * r], flat[3 * r + 1]);
        if (idx == kUndef) bad(where, "(g, c) is not a pullback pair");
        if (p.beta[idx] != kUndef) bad(where, "pullback pair listed twice");
        if (flat[3 * r + 2] >= b->total.size()) bad(where, "image out of range");
        p.beta[idx] = flat[3 * r + 2];
      }
      f.value = std::move(p);
    }
  }
  return f;
}

json document_json(const Document& v, const std::optional<EndpointRef>& sref, const std::optional<EndpointRef>& tref) {
  if (auto* d = std::get_if<StructuredData>(&v)) return structured_json(*d);
  if (auto* b = std::get_if<FiniteBundle>(&v)) return bundle_json(*b);
  if (auto* m = std::get_if<SteinbergMorphism>(&v)) {
    return json{{"kind", "morphism"},
                {"source", endpoint_json(structured_json(m->source), sref)},
                {"target", endpoint_json(structured_json(m->target), tref)},
                {"maps", {{"map", vec(m->map)}}}};
  }
  const auto& p = std::get<PierceMorphism>(v);
  json beta = json::array();
  auto pairs = pullback_pairs(p.phi, p.source);
  for (std::size_t i = 0; i < pairs.size(); ++i) beta.push_back(json::array({pairs[i].first, pairs[i].second, p.beta[i]}));
  return json{{"kind", "pierce-morphism"},
              {"source", endpoint_json(bundle_json(p.source), sref)},
              {"target", endpoint_json(bundle_json(p.target), tref)},
              {"maps", {{"phi", vec(p.phi.map)}, {"beta", beta}}}};
}

}  // namespace

std::string structure_kind(const StructuredData& d) {
  if (d.is_ring()) return "ring";
  return std::find(d.mult.begin(), d.mult.end(), kUndef) == d.mult.end() ? "semigroup" : "structured";
}

std::string bundle_kind(const FiniteBundle& b) { return b.fibers ? "ringoid-bundle" : "bundle"; }

StructureFile make_file(StructuredData d, std::map<std::string, std::string> metadata) {
  std::string k = structure_kind(d);
  return StructureFile{k, std::move(d), std::move(metadata), std::nullopt, std::nullopt};
}

StructureFile make_file(FiniteBundle b, std::map<std::string, std::string> metadata) {
  std::string k = bundle_kind(b);
  return StructureFile{k, std::move(b), std::move(metadata), std::nullopt, std::nullopt};
}

StructureFile make_file(SteinbergMorphism m, std::map<std::string, std::string> metadata) {
  return StructureFile{"morphism", std::move(m), std::move(metadata), std::nullopt, std::nullopt};
}

StructureFile make_file(PierceMorphism p, std::map<std::string, std::string> metadata) {
  return StructureFile{"pierce-morphism", std::move(p), std::move(metadata), std::nullopt, std::nullopt};
}

StructureFile parse_structure(const std::string& text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n'));
    throw ParseError("line " + std::to_string(line) + ": malformed JSON");
  }
  return parse_doc(doc, base_dir, 0);
}

StructureFile load_structure(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::runtime_error& e) {
    throw ParseError(e.what());
  }
  return parse_structure(text, path.parent_path());
}

std::string emit_structure(const StructureFile& file) {
  json doc = document_json(file.value, file.source_ref, file.target_ref);
  if (!file.metadata.empty()) doc["metadata"] = file.metadata;
  return render_document(doc);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string canonical_json(const std::string& json_text) { return render_document(json::parse(json_text)); }

}  // namespace steindual
