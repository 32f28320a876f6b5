#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkpos/braid.hpp"
#include "linkpos/errors.hpp"

namespace linkpos {

// Oriented link diagram in PD form. A crossing X[a,b,c,d] lists its four
// incident arcs counterclockwise starting from the incoming under-arc: a is
// the incoming under-arc, c the outgoing under-arc, and {b,d} the over
// strand. The sign is +1 exactly when the over strand runs d -> b.
//
// components lists every arc once, grouped into cyclic orientation order per
// link component; crossingless components are single closed loop arcs. Signs
// are first-class data: the orientation of an over strand that meets no
// other crossing cannot be recovered from the cycles alone, so constructors
// accept explicit signs and check them against the cycles.
struct LinkDiagram {
  std::vector<std::array<int, 4>> crossings;
  std::vector<std::vector<int>> components;
  std::vector<int> signs;

  bool operator==(const LinkDiagram&) const = default;
};

// Validates and, when signs is empty, derives signs from the component
// cycles (OrientationInconsistent when ambiguous).
LinkDiagram make_diagram(std::vector<std::array<int, 4>> crossings,
                         std::vector<std::vector<int>> components,
                         std::vector<int> signs = {});

// Text format: "X[a,b,c,d] ... components: (1 2 3)(4 5) signs: + - ...".
// The components clause is required; the signs clause is optional when the
// cycles determine every sign.
LinkDiagram parse_pd(const std::string& text);

// Deterministic serialization: arcs renumbered by first appearance in
// component order, crossings sorted lexicographically, signs always emitted.
std::string serialize_pd(const LinkDiagram& d);

struct PairCount {
  int positive = 0;
  int negative = 0;
};

struct DiagramProfile {
  int components_count = 0;  // l
  int crossings_count = 0;   // x
  int writhe = 0;            // w
  int seifert_circles = 0;   // o: circles of the oriented resolution
  int s_plus = 0;            // smooth negative crossings, flatten positive
  int s_minus = 0;           // smooth positive crossings, flatten negative
  int flatten_circles = 0;   // l_s: flatten every crossing
  LinkingMatrix linking;
  long long lk_total = 0;
  // Mixed crossing counts per unordered component pair (i < j).
  std::map<std::pair<int, int>, PairCount> mixed;
  bool is_positive = false;
  bool is_alternating = false;
  bool is_simply_linked = false;  // every pair's mixed crossings share a sign
  bool is_connected = false;      // underlying 4-valent graph connected
};

DiagramProfile diagram_profile(const LinkDiagram& d);

// Keeps the listed components (indices into d.components); crossings with a
// deleted strand are removed and the surviving arcs spliced through.
LinkDiagram delete_components(const LinkDiagram& d,
                              const std::vector<int>& keep);

LinkDiagram mirror_diagram(const LinkDiagram& d);

// Reverses the orientation of the listed components; mixed crossings
// touching exactly one reversed component change sign.
LinkDiagram reverse_components(const LinkDiagram& d,
                               const std::vector<int>& comps);

// Applies reversal first, then the mirror.
LinkDiagram transform_diagram(const LinkDiagram& d, bool mirror,
                              const std::vector<int>& reverse_set);

LinkDiagram disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2);

enum class FibredVerdict { FIBRED, NOT_FIBRED, NOT_APPLICABLE };

const char* fibred_verdict_name(FibredVerdict v);

// Seifert graph analysis. Vertices are the circles of the oriented
// resolution, edges the crossings. The diagram is homogeneous when every
// 2-connected block carries a single crossing sign. For positive diagrams
// the closure is fibred exactly when the reduced graph (parallel edges
// merged) is a tree; for non-positive diagrams the criterion does not apply.
struct SeifertReport {
  bool is_homogeneous = false;
  bool reduced_is_tree = false;
  int vertices = 0;
  int reduced_edges = 0;
  int block_count = 0;
  FibredVerdict fibred_positive_verdict = FibredVerdict::NOT_APPLICABLE;
};

SeifertReport seifert_analysis(const LinkDiagram& d);

// Standard closure of a braid word: x = length crossings, o = strands
// Seifert circles, one diagram component per component cycle (cycle order).
LinkDiagram braid_closure(const BraidWord& b);

// Rational (2-bridge style) twist-box chain with numerator closure. Boxes
// alternate right/bottom attachment; |a| crossings per box, the sign of a
// selects the handedness. Used by the built-in example family.
LinkDiagram make_rational(const std::vector<int>& boxes);

}  // namespace linkpos
