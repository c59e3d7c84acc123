#ifndef STEINDUAL_SECTIONS_HPP
#define STEINDUAL_SECTIONS_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "steindual/axioms.hpp"
#include "steindual/core.hpp"

namespace steindual {

class NeitherSliceSupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// values[g] is a total arrow over base arrow g.
struct Section {
  std::vector<int> values;

  bool operator==(const Section& o) const { return values == o.values; }
  bool operator<(const Section& o) const { return values < o.values; }
};

IndexSet support(const FiniteBundle& b, const Section& a);
bool is_section(const FiniteBundle& b, const Section& a);
bool slice_supported(const FiniteBundle& b, const Section& a);
bool unit_valued(const FiniteBundle& b, const Section& a);
Section zero_section(const FiniteBundle& b);
Section expectation(const FiniteBundle& b, const Section& a);

// Semigroup case: needs a or c slice-supported.
Section section_product(const FiniteBundle& b, const Section& a, const Section& c);
// Ringoid case: convolution summed in each fiber.
Section section_convolution(const FiniteBundle& b, const Section& a, const Section& c);
Section section_sum(const FiniteBundle& b, const Section& a, const Section& c);

// Fiber order used everywhere: zero first, then remaining arrows by index.
std::vector<IndexSet> ordered_fibers(const FiniteBundle& b);

// Sections in canonical order: odometer over base arrows, base arrow 0 most
// significant, each position running through its ordered fiber.
std::vector<Section> all_sections(const FiniteBundle& b);
std::vector<Section> slice_supported_sections(const FiniteBundle& b);

struct SectionStructure {
  StructuredData data;
  std::vector<Section> sections;  // sections[i] is carrier element i
  std::map<std::vector<int>, int> index;

  int index_of(const Section& s) const;
};

std::string section_name(const FiniteBundle& b, const Section& a);

// Semigroup bundle: carrier S_c.  Ringoid bundle: carrier all sections with
// S = S_c and additive tables.
SectionStructure section_structure(const FiniteBundle& b);
// Carrier all sections, S = S_c, products defined when a factor is in S_c.
SectionStructure section_semimodule(const FiniteBundle& b);

// Compares restriction, domination and orthogonality on S_c x S_c with their
// support-level descriptions.
AxiomReport relation_characterizations(const FiniteBundle& b, const SectionStructure& st);

}  // namespace steindual

#endif  // STEINDUAL_SECTIONS_HPP
