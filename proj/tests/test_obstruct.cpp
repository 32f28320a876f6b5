#include <algorithm>

#include "doctest.h"
#include "linkpos/obstruct.hpp"

using namespace linkpos;

namespace {

BraidWord braid(int n, std::vector<int> letters) {
  BraidWord b;
  b.strands = n;
  b.letters = std::move(letters);
  return b;
}

LinkData from_braid(int n, std::vector<int> letters) {
  LinkData d;
  d.braid = braid(n, std::move(letters));
  return d;
}

LinkData twist_box(int k) {
  LinkData d;
  d.diagram = mirror_diagram(make_rational({2 * k, 1, 2 * k}));
  return d;
}

bool has_line(const std::vector<std::string>& lines, const std::string& want) {
  return std::find(lines.begin(), lines.end(), want) != lines.end();
}

NuInterval exact_nu(int value2) {
  NuInterval v;
  v.lower2 = value2;
  v.upper2 = value2;
  v.exact = true;
  return v;
}

}  // namespace

TEST_CASE("partition enumeration is deterministic") {
  auto parts = all_partitions(3);
  REQUIRE(parts.size() == 5);
  CHECK(parts.front() == ComponentPartition{{0, 1, 2}});
  CHECK(parts.back() == ComponentPartition{{0}, {1}, {2}});
  CHECK(all_partitions(1) == std::vector<ComponentPartition>{{{0}}});
  CHECK(singleton_partition(3) == ComponentPartition{{0}, {1}, {2}});
  CHECK_THROWS_AS(all_partitions(11), Error);
  CHECK_THROWS_AS(all_partitions(0), Error);
}

TEST_CASE("report text layout") {
  ObstructionReport r;
  r.test = "positive";
  r.verdict = Verdict::VIOLATED;
  r.conclusion = "not a positive link";
  r.certificate = {"negative-linking-entry: lk[0][1] = -1"};
  r.missing = {"u"};
  r.provenance = {"nu(L): supplied"};
  CHECK(r.to_text() ==
        "positive: VIOLATED\n"
        "  conclusion: not a positive link\n"
        "  evidence: negative-linking-entry: lk[0][1] = -1\n"
        "  missing: u\n"
        "  provenance: nu(L): supplied\n");
}

TEST_CASE("concordance obstruction fires on the twist-box family") {
  for (int k = 1; k <= 2; ++k) {
    ObstructionReport r = check_concordance_qp(twist_box(k), {});
    CHECK(r.verdict == Verdict::VIOLATED);
    CHECK(r.conclusion == "not concordant to any quasi-positive link");
  }
  ObstructionReport r1 = check_concordance_qp(twist_box(1), {});
  CHECK(has_line(r1.certificate,
                 "partition {0}{1}: lower2(L) - sum of block nu ceilings = 2 "
                 "> 0 = 2 lk(blocks)"));

  // Supplying a chi4 value consistent with sliceness does not rescue the
  // verdict: the partition condition stays violated.
  LinkData d2 = twist_box(2);
  d2.chi4 = -2;
  CHECK(check_concordance_qp(d2, {}).verdict == Verdict::VIOLATED);
}

TEST_CASE("concordance obstruction holds on a torus link") {
  LinkData t4 = from_braid(2, {1, 1, 1, 1});
  t4.chi4 = -2;
  ObstructionReport r = check_concordance_qp(t4, {});
  CHECK(r.verdict == Verdict::SATISFIED);
  CHECK(r.conclusion == "no obstruction found");
  CHECK(has_line(r.provenance, "nu(L): computed from the diagram"));
}

TEST_CASE("concordance obstruction via the chi4 identity") {
  LinkData d = from_braid(4, {1, -2, 1, -2});  // knot plus a split unknot
  d.chi4 = -1;
  ObstructionReport r = check_concordance_qp(d, {});
  CHECK(r.verdict == Verdict::VIOLATED);
  CHECK(has_line(r.certificate, "2nu - l = -2 != 1 = -chi4"));
}

TEST_CASE("concordance obstruction on an alternating pure closure") {
  ObstructionReport r =
      check_concordance_qp(from_braid(3, {1, -2, 1, -2, 1, -2}), {});
  CHECK(r.verdict == Verdict::VIOLATED);
  CHECK(has_line(r.certificate, "sl_c = -3 < -1 = 2nu - l"));
  CHECK(has_line(r.certificate,
                 "partition {0}{1}{2}: lower2(L) - sum of block nu ceilings = "
                 "2 > 0 = 2 lk(blocks)"));
}

TEST_CASE("sl_c upper bounds: held bounds stay inconclusive, broken fire") {
  LinkData trefoil = from_braid(2, {1, 1, 1});
  trefoil.slc_upper_bound = 5;
  ObstructionReport held = check_concordance_qp(trefoil, {});
  CHECK(held.verdict == Verdict::INCONCLUSIVE);
  CHECK(has_line(held.missing,
                 "exact sl_c (only an upper bound was supplied)"));

  trefoil.slc_upper_bound = -5;
  ObstructionReport fired = check_concordance_qp(trefoil, {});
  CHECK(fired.verdict == Verdict::VIOLATED);
  CHECK(has_line(fired.certificate, "sl_c <= -5 < 1 = 2nu - l"));
}

TEST_CASE("quasi-positive obstruction from catalog data alone") {
  // A two-component link with exact 2nu = 4, linking number 2, and unknotted
  // components carrying sl_max upper bounds. Block 0's bound -2 sits below
  // 2nu - l = -1, so the link cannot be quasi-positive.
  LinkData d;
  d.nu = exact_nu(4);
  d.linking = LinkingMatrix{{{0, 2}, {2, 0}}};
  ComponentData c0;
  c0.nu = exact_nu(0);
  c0.slmax_upper = -2;
  ComponentData c1;
  c1.nu = exact_nu(0);
  c1.slmax_upper = -1;
  d.components = {c0, c1};

  ObstructionReport r = check_qp(d, singleton_partition(2));
  CHECK(r.verdict == Verdict::VIOLATED);
  CHECK(r.conclusion == "not quasi-positive");
  CHECK(has_line(r.certificate,
                 "hypothesis: 2nu(L) - sum 2nu(blocks) = 4 = 2 lk(blocks)"));
  CHECK(has_line(r.certificate, "block {0}: sl_max <= -2 < -1 = 2nu - l"));
}

TEST_CASE("quasi-positive obstruction finds nothing on the Hopf link") {
  LinkData d = from_braid(2, {1, 1});
  ComponentData c;
  c.slmax_upper = -1;
  d.components = {c, c};
  ObstructionReport r = check_qp(d, singleton_partition(2));
  CHECK(r.verdict == Verdict::SATISFIED);
  CHECK(has_line(r.certificate,
                 "hypothesis: 2nu(L) - sum 2nu(blocks) = 2 = 2 lk(blocks)"));
}

TEST_CASE("quasi-positive hypothesis failure is inconclusive") {
  ObstructionReport r = check_qp(from_braid(3, {1, -2, 1, -2, 1, -2}),
                                 singleton_partition(3));
  CHECK(r.verdict == Verdict::INCONCLUSIVE);
  CHECK(r.conclusion == "additivity hypothesis not met");
  CHECK(has_line(r.certificate,
                 "2nu(L) - sum 2nu(blocks) = 2 != 0 = 2 lk(blocks)"));
}

TEST_CASE("quasi-positive needs an exact nu") {
  LinkData d;
  NuInterval open;
  open.lower2 = 0;
  open.upper2 = 2;
  open.exact = false;
  d.nu = open;
  d.linking = LinkingMatrix{{{0, 0}, {0, 0}}};
  ObstructionReport r = check_qp(d, singleton_partition(2));
  CHECK(r.verdict == Verdict::INCONCLUSIVE);
  CHECK(r.conclusion == "additivity hypothesis untestable");
  CHECK(has_line(r.missing, "exact nu for L"));
}

TEST_CASE("positivity obstruction clauses fire in declared order") {
  ObstructionReport neg = check_positive(from_braid(2, {-1, -1}));
  CHECK(neg.verdict == Verdict::VIOLATED);
  CHECK(neg.conclusion == "not a positive link");
  CHECK(has_line(neg.certificate, "negative-linking-entry: lk[0][1] = -1"));
  CHECK(neg.missing.empty());

  LinkData borr = from_braid(3, {1, -2, 1, -2, 1, -2});
  borr.completely_split = false;
  ObstructionReport zero = check_positive(borr);
  CHECK(zero.verdict == Verdict::VIOLATED);
  CHECK(has_line(zero.certificate,
                 "zero-linking-not-split: lk total = 0 but the link is not "
                 "completely split"));

  LinkData split_only;
  split_only.linking = LinkingMatrix{{{0, 1}, {1, 0}}};
  split_only.wsp = 2;
  split_only.ssp = 3;
  ObstructionReport wsp = check_positive(split_only);
  CHECK(wsp.verdict == Verdict::VIOLATED);
  CHECK(has_line(wsp.certificate, "weak-strong-splitting-differ: wsp = 2 != 3 = ssp"));

  LinkData t4 = from_braid(2, {1, 1, 1, 1});
  t4.u = 3;
  ComponentData unknot;
  unknot.u = 0;
  t4.components = {unknot, unknot};
  ObstructionReport chain = check_positive(t4);
  CHECK(chain.verdict == Verdict::VIOLATED);
  CHECK(has_line(chain.certificate, "unlinking-chain: u - sum u_i = 3 != 2 = lk total"));
}

TEST_CASE("positivity obstruction lists what it still needs") {
  ObstructionReport r = check_positive(from_braid(2, {1, 1}));
  CHECK(r.verdict == Verdict::INCONCLUSIVE);
  CHECK(r.conclusion == "test inconclusive: supply the missing scalars");
  CHECK(r.missing == std::vector<std::string>{"wsp", "ssp", "u"});
  CHECK(has_line(r.certificate, "linking entries all >= 0"));

  CHECK_THROWS_AS(check_positive(LinkData{}), Error);
}

TEST_CASE("positive-braid obstruction on diagrams") {
  ObstructionReport granny =
      check_positive_braid(from_braid(3, {1, 1, 1, 2, 2, 2}));
  CHECK(granny.verdict == Verdict::SATISFIED);
  CHECK(!granny.certificate.empty());

  ObstructionReport borr =
      check_positive_braid(from_braid(3, {1, -2, 1, -2, 1, -2}));
  CHECK(borr.verdict == Verdict::INCONCLUSIVE);
  CHECK(borr.conclusion == "test applies to positive diagrams only");
  CHECK(borr.missing == std::vector<std::string>{"not-a-positive-diagram"});
}

TEST_CASE("positive-braid obstruction from published statistics") {
  DiagramStats consistent{4, 2, 2, 2, 2};
  ObstructionReport open = check_positive_braid(consistent, 2);
  CHECK(open.verdict == Verdict::INCONCLUSIVE);
  CHECK(open.conclusion == "per-component nu is not derivable from statistics");
  CHECK(open.missing == std::vector<std::string>{"nu-additivity"});
  CHECK(has_line(open.provenance, "diagram carried as published statistics"));

  DiagramStats published{12, 6, 4, 2, 4};
  ObstructionReport fired = check_positive_braid(published, 5);
  CHECK(fired.verdict == Verdict::VIOLATED);
  CHECK(fired.conclusion == "not a positive-braid link");
  CHECK(has_line(fired.certificate,
                 "seifert-circle-additivity: o(D) = 6 != 4 = sum o(D_i)"));
  CHECK(has_line(fired.certificate, "u-vs-nu: 2u = 10 != 8 = 2nu"));
}

TEST_CASE("alternating pure closures classify by strand pieces") {
  AltPureResult borr = classify_alt_pure(braid(3, {1, -2, 1, -2, 1, -2}));
  CHECK(!borr.qp_concordant);
  CHECK(borr.verdict == "NOT_QP_CONCORDANT");
  CHECK(borr.pieces == std::vector<std::vector<int>>{{1, 2, 3}});

  AltPureResult t4 = classify_alt_pure(braid(2, {1, 1, 1, 1}));
  CHECK(t4.qp_concordant);
  CHECK(t4.verdict == "QP_CONCORDANT");
  CHECK(t4.factors == std::vector<std::string>{"T(2,4)"});

  AltPureResult neg = classify_alt_pure(braid(5, {1, 1, -3, -3}));
  CHECK(!neg.qp_concordant);
  CHECK(neg.pieces ==
        std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5}});

  AltPureResult two = classify_alt_pure(braid(4, {1, 1, 3, 3, 1, 1}));
  CHECK(two.qp_concordant);
  CHECK(two.factors == std::vector<std::string>{"T(2,4)", "T(2,2)"});

  CHECK_THROWS_AS(classify_alt_pure(braid(2, {1})), Error);
  CHECK_THROWS_AS(classify_alt_pure(braid(2, {1, -1})), Error);
}

// Property: the classifier and the partition obstruction agree on
// alternating pure closures: NOT_QP_CONCORDANT forces VIOLATED and
// QP_CONCORDANT forbids it.
TEST_CASE("classifier agrees with the partition obstruction") {
  ObstructionReport fired =
      check_concordance_qp(from_braid(5, {1, 1, -3, -3}), {});
  CHECK(fired.verdict == Verdict::VIOLATED);

  ObstructionReport held =
      check_concordance_qp(from_braid(4, {1, 1, 3, 3, 1, 1}), {});
  CHECK(held.verdict != Verdict::VIOLATED);
}

TEST_CASE("small unlinking numbers land in the published families") {
  SmallUnlinkingResult hopf =
      classify_small_unlinking(from_braid(2, {1, 1}));
  CHECK(hopf.family == SmallUnlinkingFamily::HOPF_SPLIT_UNLINK);
  CHECK(hopf.u == 1);
  CHECK(has_line(hopf.notes, "u = lk + sum u_i: 1 = 1 + 0"));

  CHECK(classify_small_unlinking(from_braid(3, {1, 1})).family ==
        SmallUnlinkingFamily::HOPF_SPLIT_UNLINK);

  CHECK(classify_small_unlinking(from_braid(2, {1, 1, 1})).family ==
        SmallUnlinkingFamily::TWIST_KNOT_SPLIT_UNLINK);

  CHECK(classify_small_unlinking(from_braid(2, {1, 1, 1, 1})).family ==
        SmallUnlinkingFamily::U2_LINKING_TWO_UNKNOTTED);

  CHECK(classify_small_unlinking(from_braid(3, {1, 1, 1, 2, 2, 2})).family ==
        SmallUnlinkingFamily::U2_KNOT_UNKNOTTING_TWO);

  SmallUnlinkingResult sum =
      classify_small_unlinking(from_braid(3, {1, 1, 2, 2, 2}));
  CHECK(sum.family == SmallUnlinkingFamily::U2_HOPF_CONNSUM_TWIST);

  CHECK(classify_small_unlinking(from_braid(2, {})).family ==
        SmallUnlinkingFamily::UNLINK);
}

TEST_CASE("small unlinking rejects inconsistent or out-of-range data") {
  LinkData contradict = from_braid(2, {1, 1});
  contradict.u = 3;
  ComponentData unknot;
  unknot.u = 0;
  contradict.components = {unknot, unknot};
  SmallUnlinkingResult r = classify_small_unlinking(contradict);
  CHECK(r.family == SmallUnlinkingFamily::CONTRADICTION);
  CHECK(has_line(r.notes, "u = 3 but lk + sum u_i = 1"));

  LinkData big = from_braid(2, {1, 1});
  big.u = 3;
  ComponentData knotted;
  knotted.u = 2;
  big.components = {knotted, unknot};
  try {
    classify_small_unlinking(big);
    FAIL("expected UnsupportedU");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedU);
    CHECK(std::string(e.what()).find("NOT_CLASSIFIED") != std::string::npos);
  }

  CHECK_THROWS_AS(
      classify_small_unlinking(from_braid(3, {1, -2, 1, -2, 1, -2})),
      Error);
}
