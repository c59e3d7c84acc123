#include <filesystem>

#include "doctest.h"
#include "steindual/examples.hpp"
#include "steindual/io.hpp"

using namespace steindual;
namespace fs = std::filesystem;

namespace {
std::string message_of(const std::string& text) {
  try {
    parse_structure(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

fs::path scratch(const char* name) {
  fs::path p = fs::temp_directory_path() / ("steindual_io_" + std::to_string(::getpid())) / name;
  fs::create_directories(p);
  return p;
}
}  // namespace

TEST_CASE("emit and parse are inverse on every fixture") {
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    Fixture f = fixture(name);
    StructureFile file = f.is_bundle() ? make_file(f.bundle(), {{"name", name}}) : make_file(f.data(), {{"name", name}});
    std::string text = emit_structure(file);
    StructureFile back = parse_structure(text);
    CHECK(back.kind == file.kind);
    CHECK(back.metadata == file.metadata);
    CHECK(emit_structure(back) == text);
    CHECK(canonical_json(text) == text);
    if (f.is_bundle())
      CHECK(same_bundle(std::get<FiniteBundle>(back.value), f.bundle()));
    else
      CHECK(same_structure(std::get<StructuredData>(back.value), f.data()));
  }
}

TEST_CASE("kinds") {
  CHECK(structure_kind(fixture("I2").data()) == "semigroup");
  CHECK(structure_kind(fixture("M2F2").data()) == "ring");
  CHECK(bundle_kind(fixture("TRIVBUN").bundle()) == "ringoid-bundle");
  FiniteBundle sb = fixture("TRIVBUN").bundle();
  sb.fibers.reset();
  CHECK(bundle_kind(sb) == "bundle");
}

TEST_CASE("morphism files with embedded and referenced endpoints") {
  StructureFile m = make_file(i2_to_m2f2s());
  std::string text = emit_structure(m);
  StructureFile back = parse_structure(text);
  CHECK(emit_structure(back) == text);
  CHECK(std::get<SteinbergMorphism>(back.value).map == i2_to_m2f2s().map);

  PierceMorphism p = functor_U(i2_to_m2f2s());
  std::string ptext = emit_structure(make_file(p));
  StructureFile pb = parse_structure(ptext);
  CHECK(std::get<PierceMorphism>(pb.value).beta == p.beta);
  CHECK(emit_structure(pb) == ptext);

  fs::path dir = scratch("refs");
  std::string src = emit_structure(make_file(fixture("I2").data()));
  std::string tgt = emit_structure(make_file(fixture("M2F2-S").data()));
  write_file(dir / "i2.json", src);
  write_file(dir / "m2.json", tgt);
  StructureFile ref = m;
  ref.source_ref = EndpointRef{"i2.json", sha256_hex(src)};
  ref.target_ref = EndpointRef{"m2.json", sha256_hex(tgt)};
  std::string rtext = emit_structure(ref);
  write_file(dir / "m.json", rtext);
  StructureFile loaded = load_structure(dir / "m.json");
  CHECK(loaded.source_ref.has_value());
  CHECK(emit_structure(loaded) == rtext);

  write_file(dir / "i2.json", src + " ");
  CHECK_THROWS_AS(load_structure(dir / "m.json"), ParseError);
  fs::remove_all(dir.parent_path());
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("parse errors name the problem") {
  std::string good = emit_structure(make_file(fixture("POW2").data()));
  CHECK(message_of("{\n  \"kind\": \n}") == "line 3: malformed JSON");
  std::string extra = good;
  extra.insert(1, "\n  \"colour\": 1,");
  CHECK(message_of(extra).find("colour") != std::string::npos);
  std::string row = good;
  auto pos = row.find("[0, 0, 0, 0]");
  REQUIRE(pos != std::string::npos);
  row.replace(pos, 12, "[0, 0, 0]");
  CHECK(message_of(row).find("tables.mult") != std::string::npos);
  CHECK_THROWS_AS(load_structure("/nonexistent/steindual.json"), ParseError);
}

TEST_CASE("checked-in fixture files are canonical") {
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(STEINDUAL_FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().filename().string());
    std::string text = read_file(entry.path());
    CHECK(emit_structure(load_structure(entry.path())) == text);
    ++seen;
  }
  CHECK(seen == 10);
}
