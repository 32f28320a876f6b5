#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "linkpos/braid.hpp"
#include "linkpos/diagram.hpp"
#include "linkpos/errors.hpp"
#include "linkpos/obstruct.hpp"

namespace linkpos {

// One catalog row (JSON Lines, schema "v1"). At least one of braid / PD is
// present. Scalars that cannot be computed combinatorially (signature, chi4,
// unlinking and splitting numbers, sl_max bounds) ride along as data with
// per-field provenance. Unknown fields are preserved verbatim in raw_json.
struct CatalogEntry {
  std::string name;     // includes the orientation variant, e.g. "L6a1{1}"
  std::string variant;
  std::optional<BraidWord> braid;
  std::string pd_text;  // empty when absent

  std::optional<long long> signature;
  std::optional<long long> chi4;
  std::optional<long long> u;
  std::optional<long long> wsp;
  std::optional<long long> ssp;
  std::optional<long long> slmax_upper;

  std::vector<ComponentData> components;
  bool has_component_positive = false;  // any per-component positive field

  bool positive_expected = false;
  bool braid_positive_expected = false;
  bool completely_split = false;
  std::optional<bool> fibred;
  bool has_signature = false;
  bool has_fibred = false;

  std::string notes;
  std::string raw_json;  // original line, for round-tripping
};

// SchemaError carries the 1-based line number; duplicate names are rejected.
std::vector<CatalogEntry> load_catalog(const std::string& path);
std::vector<CatalogEntry> load_catalog_stream(std::istream& in,
                                              const std::string& source);

// Re-emits the original JSON lines (load -> serialize -> load is identity).
std::string serialize_catalog(const std::vector<CatalogEntry>& entries);

// Built-in example objects:
//   "Dk"       (k >= 1)  alternating 2-component diagram with lk = 0 made of
//                        two k-twist boxes and a clasp; k = 1 is the
//                        Whitehead link       -> LinkDiagram
//   "fig3"               B4: 2 2 2 1 3 2 1 3  -> BraidWord
//   "borromean"          B3: 1 -2 1 -2 1 -2   -> BraidWord
//   "torus2n"  (k >= 1)  B2: 1 x 2k           -> BraidWord
//   "hopf"               B2: 1 1              -> BraidWord
using BuiltinObject = std::variant<BraidWord, LinkDiagram>;

BuiltinObject builtin_example(const std::string& name,
                              std::optional<int> k = std::nullopt);

// Published statistics of the 12-crossing positive example diagram whose
// picture is carried as numbers: x = 12, o = 6, sum o(D_i) = 4, l = 2,
// lk = 4 (an unknot and a trefoil component).
DiagramStats figure5_stats();

// Runs every applicable obstruction test on one entry, merging
// diagram-computed quantities with the catalog scalars. Report order:
// concordance-quasi-positive, quasi-positive, positive, positive-braid.
std::vector<ObstructionReport> analyze_entry(const CatalogEntry& e);

// Builds the LinkData view of an entry (closure of the braid when present,
// parsed PD otherwise, plus all catalog scalars).
LinkData entry_link_data(const CatalogEntry& e);

struct TableDocument {
  std::string text;
  std::string csv;
};

// Renders the obstruction table. Columns: Name | P | 1.6 | BP | 1.9.
// P / BP show the expectation flags; 1.6 / 1.9 show whether the positivity /
// braid-positivity test fired (check when VIOLATED), with an em dash where
// the column does not apply. Fallback annotations on the expectation cells:
// ^<sigma> when a signature rides along, ^c for per-component positivity
// data, ^f for fibredness data; each only on rows where the fired-test
// column shows a cross. Rows sort by name; output is byte-deterministic.
TableDocument render_table(
    const std::vector<CatalogEntry>& entries,
    const std::vector<std::vector<ObstructionReport>>& reports);

}  // namespace linkpos
