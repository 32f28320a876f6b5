#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkpos/braid.hpp"
#include "linkpos/diagram.hpp"
#include "linkpos/errors.hpp"
#include "linkpos/invariants.hpp"

namespace linkpos {

// Every obstruction test is one-directional: VIOLATED certifies the link
// does not have the property, SATISFIED only means "no obstruction found"
// and never proves the property holds.
enum class Verdict { SATISFIED, VIOLATED, INCONCLUSIVE };

const char* verdict_name(Verdict v);

struct ObstructionReport {
  std::string test;  // "concordance-quasi-positive", "quasi-positive",
                     // "positive", "positive-braid"
  Verdict verdict = Verdict::INCONCLUSIVE;
  std::string conclusion;
  // Numeric evidence, one line per checked condition; for VIOLATED and
  // SATISFIED these re-validate by integer arithmetic alone.
  std::vector<std::string> certificate;
  std::vector<std::string> missing;  // inputs absent for INCONCLUSIVE
  std::vector<std::string> provenance;

  std::string to_text() const;
};

// Per-component catalog data. Splitting and unlinking scalars are inputs,
// never searched for.
struct ComponentData {
  std::optional<NuInterval> nu;
  std::optional<long long> u;
  std::optional<bool> positive;
  std::optional<bool> positive_mirror;
  std::optional<long long> slmax_upper;
};

// Everything a test may consume about one link: a diagram and/or braid,
// precomputed or catalog-supplied bounds, and catalog scalars. Tests fill
// whatever is missing from the diagram when they can and report the rest as
// missing inputs.
struct LinkData {
  std::optional<LinkDiagram> diagram;
  std::optional<BraidWord> braid;
  std::optional<NuInterval> nu;           // for L; else computed
  std::optional<LinkingMatrix> linking;   // else computed
  std::optional<long long> chi4;          // chi4(L) itself
  std::optional<long long> signature;
  std::optional<long long> u;
  std::optional<long long> wsp;
  std::optional<long long> ssp;
  std::optional<long long> slmax_upper;   // upper bound on sl_max(L)
  std::optional<long long> slc_upper_bound;
  std::optional<bool> completely_split;
  std::vector<ComponentData> components;  // empty or one entry per component
};

// Resolves the working diagram: the braid closure when a braid is present,
// the diagram otherwise. MissingInput when neither exists.
LinkDiagram resolve_diagram(const LinkData& data);

// Concordance-to-quasi-positive obstruction. For each tested partition it
// checks lower2(L) - sum_i upper2(L_i) <= 2 sum lk(blocks); with exact nu it
// additionally checks 2 nu - l = -chi4 (when chi4 is supplied) and
// sl_c upper >= 2 nu - l (when a pure-braid sl_c value or supplied bound is
// available). SATISFIED only when every testable condition held with exact
// values. partitions empty means: enumerate all partitions (component count
// capped at 10; beyond that explicit partitions are required).
ObstructionReport check_concordance_qp(
    const LinkData& data, const std::vector<ComponentPartition>& partitions);

// Quasi-positivity obstruction for one partition. Hypothesis: nu(L) -
// sum nu(L_i) = sum lk (all exact). When it holds and a block has a
// catalog sl_max upper bound below 2 nu(L_i) - l_i, the link cannot be
// quasi-positive. Hypothesis failure makes the test INCONCLUSIVE.
ObstructionReport check_qp(const LinkData& data,
                           const ComponentPartition& partition);

// Positivity obstruction: negative linking entry; total linking zero
// without complete splitness; wsp != ssp; u(L) - sum u(K_i) != lk(L).
ObstructionReport check_positive(const LinkData& data);

// Positive-braid obstruction on a positive diagram: (a) o(D) = sum o(D_i),
// (b) 2nu(L) - sum 2nu(K_i) = 2 lk(L) (exact on positive diagrams),
// (c) 2u = 2nu when u is supplied. A non-positive diagram makes the test
// INCONCLUSIVE rather than an error.
ObstructionReport check_positive_braid(const LinkData& data);

// Statistics-only variant for diagrams carried as published numbers.
ObstructionReport check_positive_braid(const DiagramStats& stats,
                                       std::optional<long long> u);

// Classification of alternating pure-braid closures. The strands split into
// generator-connected pieces; the closure is concordant to a quasi-positive
// link exactly when every piece has at most two strands and each two-strand
// piece is positive, in which case the factors are the torus links T(2,2m)
// and unknots.
struct AltPureResult {
  bool qp_concordant = false;
  std::vector<std::vector<int>> pieces;   // strand sets
  std::vector<std::string> factors;       // "T(2,4)", "unknot", ...
  std::string verdict;  // "QP_CONCORDANT" | "NOT_QP_CONCORDANT"
};

AltPureResult classify_alt_pure(const BraidWord& b);

// Families of positive links with unlinking number at most two. u = 1 and
// u = 2 split into the published families; data inconsistent with every
// family yields CONTRADICTION (a result, not an error). u >= 3 raises
// UnsupportedU carrying NOT_CLASSIFIED.
enum class SmallUnlinkingFamily {
  UNLINK,                    // u = 0
  HOPF_SPLIT_UNLINK,         // u = 1: positive Hopf link, split unlink rest
  TWIST_KNOT_SPLIT_UNLINK,   // u = 1: positive twist knot, split unlink rest
  U2_LINKING_TWO_UNKNOTTED,  // (a) total linking 2, unknotted components
  U2_HOPF_CONNSUM_TWIST,     // (b) Hopf link # positive twist knot
  U2_HOPF_SPLIT_TWIST,       // (c) Hopf link split union positive twist knot
  U2_TWO_TWIST_KNOTS,        // (d) split union of two positive twist knots
  U2_KNOT_UNKNOTTING_TWO,    // (e) positive knot with unknotting number 2
  CONTRADICTION,
};

const char* small_unlinking_family_label(SmallUnlinkingFamily f);

struct SmallUnlinkingResult {
  SmallUnlinkingFamily family = SmallUnlinkingFamily::CONTRADICTION;
  long long u = 0;
  long long lk_total = 0;
  std::vector<long long> component_u;
  std::vector<std::string> notes;
};

SmallUnlinkingResult classify_small_unlinking(const LinkData& data);

// All partitions of {0..l-1}, deterministic order (restricted growth
// strings). Component counts above 10 require explicit partitions.
std::vector<ComponentPartition> all_partitions(int l);

// The singleton partition {{0},{1},..}.
ComponentPartition singleton_partition(int l);

}  // namespace linkpos
