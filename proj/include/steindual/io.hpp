#ifndef STEINDUAL_IO_HPP
#define STEINDUAL_IO_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "steindual/duality.hpp"

namespace steindual {

// Syntax or schema error; the message names the line or the key path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A morphism endpoint stored as a path (relative to the morphism file) and
// the sha256 of that file's bytes.
struct EndpointRef {
  std::string path;
  std::string sha256;
};

using Document = std::variant<StructuredData, FiniteBundle, SteinbergMorphism, PierceMorphism>;

struct StructureFile {
  std::string kind;
  Document value;
  std::map<std::string, std::string> metadata;
  std::optional<EndpointRef> source_ref;
  std::optional<EndpointRef> target_ref;
};

// "semigroup" for a total multiplication, "ring" with additive tables,
// "structured" otherwise.
std::string structure_kind(const StructuredData& d);
std::string bundle_kind(const FiniteBundle& b);

StructureFile make_file(StructuredData d, std::map<std::string, std::string> metadata = {});
StructureFile make_file(FiniteBundle b, std::map<std::string, std::string> metadata = {});
StructureFile make_file(SteinbergMorphism m, std::map<std::string, std::string> metadata = {});
StructureFile make_file(PierceMorphism p, std::map<std::string, std::string> metadata = {});

// base_dir resolves endpoint references.
StructureFile parse_structure(const std::string& text, const std::filesystem::path& base_dir = {});
StructureFile load_structure(const std::filesystem::path& path);
std::string emit_structure(const StructureFile& file);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);
std::string sha256_hex(const std::string& bytes);

// Canonical text for any JSON value: sorted keys, two-space indent, scalar
// arrays on one line.  Shared with the machine-readable report format.
std::string canonical_json(const std::string& json_text);

}  // namespace steindual

#endif  // STEINDUAL_IO_HPP
