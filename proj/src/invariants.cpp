#include "linkpos/invariants.hpp"

#include <string>

namespace linkpos {

int NuInterval::value2() const {
  if (!exact)
    throw Error(ErrorKind::MissingInput,
                "exact nu requested but only bounds are available");
  return lower2;
}

NuInterval nu_bounds(const LinkDiagram& d) {
  DiagramProfile p = diagram_profile(d);
  SeifertReport sa = seifert_analysis(d);
  NuInterval nu;
  nu.lower2 = p.writhe - p.seifert_circles + 2 * p.s_plus +
              p.components_count - 2 * p.flatten_circles;
  nu.upper2 = p.writhe + p.seifert_circles - 2 * p.s_minus -
              p.components_count + 2 * p.flatten_circles;
  nu.exact = sa.is_homogeneous;
  if (!nu.exact && nu.upper2 < nu.lower2)
    throw Error(ErrorKind::FormulaInconsistency,
                "upper2=" + std::to_string(nu.upper2) +
                    " < lower2=" + std::to_string(nu.lower2) +
                    " on a non-homogeneous diagram");
  nu.provenance.push_back("diagram resolution counts");
  if (nu.exact) nu.provenance.push_back("homogeneous: exact at lower bound");
  return nu;
}

int nu_lower_from_braid(const BraidWord& b) {
  return braid_profile(b).self_linking;
}

ChainReport bennequin_chain(const BraidWord& b, const NuInterval& nu,
                            std::optional<long long> minus_chi4) {
  BraidProfile p = braid_profile(b);
  long long l = static_cast<long long>(p.component_cycles.size());
  ChainReport r;

  // sl(b) <= 2nu - l, compared against the certified ceiling of 2nu.
  long long ceil2 = nu.exact ? nu.value2() : nu.upper2;
  ChainLink first;
  first.name = "sl(b) <= 2nu - l";
  first.lhs = p.self_linking;
  first.rhs = ceil2 - l;
  first.slack = first.rhs - first.lhs;
  if (first.slack < 0)
    throw Error(ErrorKind::ChainViolation,
                "sl(b) = " + std::to_string(first.lhs) + " exceeds 2nu - l = " +
                    std::to_string(first.rhs));
  r.links.push_back(first);

  if (minus_chi4) {
    // 2nu - l <= -chi4, compared against the certified floor of 2nu.
    long long floor2 = nu.exact ? nu.value2() : nu.lower2;
    ChainLink second;
    second.name = "2nu - l <= -chi4";
    second.lhs = floor2 - l;
    second.rhs = *minus_chi4;
    second.slack = second.rhs - second.lhs;
    if (second.slack < 0)
      throw Error(ErrorKind::ChainViolation,
                  "2nu - l = " + std::to_string(second.lhs) +
                      " exceeds -chi4 = " + std::to_string(second.rhs));
    r.links.push_back(second);
  }
  r.holds = true;
  return r;
}

SlcPureResult slc_pure(const BraidWord& b) {
  BraidProfile p = braid_profile(b);
  if (!p.is_pure)
    throw Error(ErrorKind::NotPure,
                "sl_c formula requires a pure braid (identity permutation)");
  SlcPureResult r;
  r.components = static_cast<int>(p.component_cycles.size());
  r.lk_total = braid_linking_matrix(b).total();
  r.value = 2 * r.lk_total - r.components;
  r.self_linking = p.self_linking;
  if (r.value != r.self_linking)
    throw Error(ErrorKind::FormulaInconsistency,
                "2 lk - l = " + std::to_string(r.value) +
                    " disagrees with sl(b) = " +
                    std::to_string(r.self_linking));
  return r;
}

long long slc_upper(const std::vector<long long>& part_upper_bounds,
                    long long lk_between) {
  long long sum = 0;
  for (long long v : part_upper_bounds) sum += v;
  return sum + 2 * lk_between;
}

namespace {

long long halve_unlinking(long long numerator) {
  if (numerator % 2 != 0)
    throw Error(ErrorKind::ParityError,
                "unlinking numerator " + std::to_string(numerator) +
                    " is odd");
  return numerator / 2;
}

}  // namespace

long long positive_unlinking(const LinkDiagram& d, UnlinkingMode mode) {
  DiagramProfile p = diagram_profile(d);
  if (!p.is_positive)
    throw Error(ErrorKind::NotPositiveDiagram,
                "unlinking formula needs an all-positive diagram");
  long long circles = 0;
  if (mode == UnlinkingMode::Whole) {
    circles = p.seifert_circles;
  } else {
    for (int i = 0; i < p.components_count; ++i)
      circles += diagram_profile(delete_components(d, {i})).seifert_circles;
  }
  return halve_unlinking(p.crossings_count - circles + p.components_count);
}

long long positive_unlinking(const DiagramStats& stats, UnlinkingMode mode) {
  long long circles = mode == UnlinkingMode::Whole
                          ? stats.seifert_circles
                          : stats.component_seifert_total;
  return halve_unlinking(stats.crossings - circles + stats.components);
}

}  // namespace linkpos
