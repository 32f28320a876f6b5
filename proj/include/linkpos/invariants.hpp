#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkpos/braid.hpp"
#include "linkpos/diagram.hpp"
#include "linkpos/errors.hpp"

namespace linkpos {

// Integer bounds on the doubled slice-torus invariant 2 * nu(L). Values are
// stored doubled so every bound stays integral. On homogeneous diagrams the
// lower bound is sharp and takes precedence: exact = true and the value is
// lower2, with upper2 kept verbatim even when it undercuts the exact value
// (a recorded discrepancy of the published upper formula on multi-component
// links, never resolved silently).
struct NuInterval {
  int lower2 = 0;
  int upper2 = 0;
  bool exact = false;
  std::vector<std::string> provenance;

  // Defined only when exact.
  int value2() const;

  bool operator==(const NuInterval& o) const {
    return lower2 == o.lower2 && upper2 == o.upper2 && exact == o.exact;
  }
};

// lower2 = w - o + 2 s_plus + l - 2 l_s, upper2 = w + o - 2 s_minus - l +
// 2 l_s, both verbatim. Homogeneous diagrams are exact at lower2. A
// non-homogeneous diagram with upper2 < lower2 raises FormulaInconsistency.
NuInterval nu_bounds(const LinkDiagram& d);

// sl(b) = writhe - strands, a certified lower bound for 2 nu(closure) - l.
int nu_lower_from_braid(const BraidWord& b);

// The chain sl(b) <= 2 nu - l <= -chi4, checked interval-wise. minus_chi4,
// when present, is the value -chi4(L). Slack is reported per link; a
// certified violation (inconsistent catalog data) raises ChainViolation.
struct ChainLink {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  long long slack = 0;  // rhs - lhs, on the certified side
};

struct ChainReport {
  std::vector<ChainLink> links;
  bool holds = true;
};

ChainReport bennequin_chain(const BraidWord& b, const NuInterval& nu,
                            std::optional<long long> minus_chi4);

// sl_c of the closure of a pure braid: 2 lk(L) - l, which equals sl(b).
struct SlcPureResult {
  long long value = 0;
  long long lk_total = 0;
  int components = 0;
  long long self_linking = 0;
};

SlcPureResult slc_pure(const BraidWord& b);

// Upper bound for sl_c of a split-free combination: sum of per-part upper
// bounds plus twice the linking between parts. Unknot parts contribute -1.
long long slc_upper(const std::vector<long long>& part_upper_bounds,
                    long long lk_between);

enum class UnlinkingMode { Whole, PerComponent };

// Unlinking number from a positive diagram.
//   Whole:        u = (x - o + l) / 2        (positive-braid links)
//   PerComponent: u = (x - sum_i o(D_i) + l) / 2, D_i the single-component
//                 sub-diagrams (positive links with positive-braid
//                 components; caller asserts that hypothesis).
// NotPositiveDiagram when a crossing is negative; ParityError when the
// numerator is odd (invalid input data).
long long positive_unlinking(const LinkDiagram& d, UnlinkingMode mode);

// Published statistics of a positive diagram whose picture is not carried
// as PD data. component_seifert_total is sum_i o(D_i).
struct DiagramStats {
  int crossings = 0;           // x
  int seifert_circles = 0;     // o
  int component_seifert_total = 0;
  int components = 0;          // l
  long long lk_total = 0;
};

long long positive_unlinking(const DiagramStats& stats, UnlinkingMode mode);

}  // namespace linkpos
