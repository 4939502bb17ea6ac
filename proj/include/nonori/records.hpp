#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nonori/gl2z.hpp"
#include "nonori/homology.hpp"
#include "nonori/seifert.hpp"

namespace nonori {

// Geometric decomposition along tori and Klein bottles, given as the number
// of each and the Seifert blocks. For one torus between two blocks,
// `gluing` maps the boundary basis (section, fiber) of the first block to
// that of the second.
struct DecompositionDescriptor {
  int tori = 0;
  int kleins = 0;
  std::vector<SeifertData> blocks;
  std::optional<GL2Z> gluing;

  // "T", "K" or "KK" etc, then ':' blocks joined by '+', then ':' gluing.
  std::string str() const;
  static DecompositionDescriptor parse(std::string_view s);
  bool operator==(const DecompositionDescriptor&) const = default;
};

// One of the six orientable flat manifolds, by its usual name G1..G6.
struct FlatTag {
  std::string name;
  bool operator==(const FlatTag&) const = default;
};

struct Hyperbolic {
  bool operator==(const Hyperbolic&) const = default;
};

using RecordStructure = std::variant<SeifertData, GL2Z, DecompositionDescriptor, FlatTag, Hyperbolic>;

struct CensusRecord {
  std::string name;
  int complexity = 0;
  Geometry geometry = Geometry::S3;
  RecordStructure structure;
  std::optional<Fingerprint> fingerprint;
  std::optional<std::string> iso_sig;

  // name|c|geometry|structure|fingerprint|isosig with '-' for absent fields.
  std::string str() const;
};

std::string structure_str(const RecordStructure& s);
// "seifert:...", "bundle:[[a,b],[c,d]]", "decomp:...", "flat:Gk", "hyperbolic".
RecordStructure parse_structure(std::string_view s);

// Throws ParseError carrying `line` for malformed or inconsistent records.
CensusRecord parse_record(std::string_view text, int line = 0);
// Blank lines and lines starting with '#' are skipped.
std::vector<CensusRecord> ingest_orientable_census_text(std::string_view text);
std::vector<CensusRecord> ingest_orientable_census(const std::string& path);
std::string default_census_path();

struct Quotient {
  enum class Kind { Seifert, Sol, Flat };
  Kind kind;
  std::string name;
  std::optional<SeifertData> seifert;
  std::optional<GL2Z> monodromy;
};

struct FilterResult {
  std::vector<Quotient> quotients;
  std::string reason;  // why there are none
};

FilterResult filter_orientable_record(const CensusRecord& rec);

struct ClassifiedManifold {
  std::string name;
  std::string cover;
  int cover_complexity = 0;
  int lower = 0;  // from c(cover) <= 2c - 5
  int upper = 0;  // from the witness
  std::string witness;
  bool bound_consistent = false;  // lower <= upper and c(cover) <= 2 upper - 5
};

struct ClassificationReport {
  std::array<int, 8> counts{};  // non-orientable manifolds with c = 0..7
  std::vector<ClassifiedManifold> manifolds;
  std::vector<std::string> bullets;  // one per cover complexity 6..9
  std::vector<std::pair<std::string, std::string>> excluded;  // record, reason
  std::string str() const;
};

ClassificationReport reproduce_classification(const std::vector<CensusRecord>& records);

}  // namespace nonori
