#include "linkpos/obstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace linkpos {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SATISFIED: return "SATISFIED";
    case Verdict::VIOLATED: return "VIOLATED";
    case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string ObstructionReport::to_text() const {
  std::string out = test + ": " + verdict_name(verdict) + "\n";
  if (!conclusion.empty()) out += "  conclusion: " + conclusion + "\n";
  for (const auto& c : certificate) out += "  evidence: " + c + "\n";
  for (const auto& m : missing) out += "  missing: " + m + "\n";
  for (const auto& p : provenance) out += "  provenance: " + p + "\n";
  return out;
}

LinkDiagram resolve_diagram(const LinkData& data) {
  if (data.braid) return braid_closure(*data.braid);
  if (data.diagram) return *data.diagram;
  throw Error(ErrorKind::MissingInput, "no braid or diagram supplied");
}

ComponentPartition singleton_partition(int l) {
  ComponentPartition p;
  for (int i = 0; i < l; ++i) p.push_back({i});
  return p;
}

std::vector<ComponentPartition> all_partitions(int l) {
  if (l < 1)
    throw Error(ErrorKind::InvalidPartition, "no components to partition");
  if (l > 10)
    throw Error(ErrorKind::InvalidPartition,
                std::to_string(l) +
                    " components: explicit partitions required beyond 10");
  std::vector<ComponentPartition> out;
  std::vector<int> a(l, 0);  // restricted growth string
  while (true) {
    int blocks = *std::max_element(a.begin(), a.end()) + 1;
    ComponentPartition part(blocks);
    for (int i = 0; i < l; ++i) part[a[i]].push_back(i);
    out.push_back(std::move(part));
    int i = l - 1;
    for (; i > 0; --i) {
      int prefix_max = *std::max_element(a.begin(), a.begin() + i);
      if (a[i] <= prefix_max) break;
    }
    if (i == 0) break;
    a[i] += 1;
    std::fill(a.begin() + i + 1, a.end(), 0);
  }
  return out;
}

namespace {

void validate_partition(const ComponentPartition& p, int l) {
  std::vector<int> seen(l, 0);
  for (const auto& block : p) {
    if (block.empty())
      throw Error(ErrorKind::InvalidPartition, "empty partition block");
    for (int i : block) {
      if (i < 0 || i >= l)
        throw Error(ErrorKind::InvalidPartition,
                    "component " + std::to_string(i) + " out of range");
      seen[i] += 1;
    }
  }
  for (int i = 0; i < l; ++i)
    if (seen[i] != 1)
      throw Error(ErrorKind::InvalidPartition,
                  "component " + std::to_string(i) + " covered " +
                      std::to_string(seen[i]) + " times");
}

std::string block_label(const std::vector<int>& block) {
  std::vector<int> b(block);
  std::sort(b.begin(), b.end());
  std::string s = "{";
  for (size_t i = 0; i < b.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(b[i]);
  }
  return s + "}";
}

std::string partition_label(const ComponentPartition& p) {
  std::string s;
  for (const auto& b : p) s += block_label(b);
  return s;
}

std::string num(long long v) { return std::to_string(v); }

// Everything a test can resolve about the link under study.
struct LinkView {
  std::optional<LinkDiagram> diagram;
  std::optional<NuInterval> nu;
  std::optional<LinkingMatrix> linking;
  int l = 0;
  bool nu_supplied = false;
};

LinkView make_view(const LinkData& data) {
  LinkView v;
  if (data.braid)
    v.diagram = braid_closure(*data.braid);
  else if (data.diagram)
    v.diagram = *data.diagram;
  if (data.nu) {
    v.nu = *data.nu;
    v.nu_supplied = true;
  } else if (v.diagram) {
    v.nu = nu_bounds(*v.diagram);
  }
  if (data.linking)
    v.linking = *data.linking;
  else if (v.diagram)
    v.linking = diagram_profile(*v.diagram).linking;
  if (v.diagram)
    v.l = static_cast<int>(v.diagram->components.size());
  else if (v.linking)
    v.l = v.linking->size();
  else
    v.l = static_cast<int>(data.components.size());
  return v;
}

// nu bounds for one partition block: the whole link, a catalog-supplied
// per-component interval, or the deleted sub-diagram. A FormulaInconsistency
// on a sub-diagram makes the block's bounds unavailable rather than fatal.
std::optional<NuInterval> block_nu(const LinkData& data, const LinkView& v,
                                   const std::vector<int>& block) {
  if (static_cast<int>(block.size()) == v.l) return v.nu;
  if (block.size() == 1) {
    size_t i = static_cast<size_t>(block[0]);
    if (i < data.components.size() && data.components[i].nu)
      return data.components[i].nu;
  }
  if (v.diagram) {
    try {
      return nu_bounds(delete_components(*v.diagram, block));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::FormulaInconsistency) return std::nullopt;
      throw;
    }
  }
  return std::nullopt;
}

long long lk_between_blocks(const LinkingMatrix& lk,
                            const ComponentPartition& p) {
  std::vector<int> owner(lk.size(), -1);
  for (size_t b = 0; b < p.size(); ++b)
    for (int i : p[b]) owner[i] = static_cast<int>(b);
  long long sum = 0;
  for (int i = 0; i < lk.size(); ++i)
    for (int j = i + 1; j < lk.size(); ++j)
      if (owner[i] != owner[j]) sum += lk.entries[i][j];
  return sum;
}

void push_unique(std::vector<std::string>& v, const std::string& s) {
  if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
}

}  // namespace

ObstructionReport check_concordance_qp(
    const LinkData& data, const std::vector<ComponentPartition>& partitions) {
  ObstructionReport rep;
  rep.test = "concordance-quasi-positive";
  LinkView v = make_view(data);
  if (!v.nu)
    throw Error(ErrorKind::MissingInput,
                "nu bounds for the link: supply nu, a braid, or a diagram");
  const NuInterval& nuL = *v.nu;
  rep.provenance.push_back(v.nu_supplied ? "nu(L): supplied"
                                         : "nu(L): computed from the diagram");
  if (v.l < 1)
    throw Error(ErrorKind::MissingInput, "component count not determinable");

  std::vector<ComponentPartition> parts =
      partitions.empty() ? all_partitions(v.l) : partitions;
  for (const auto& p : parts) validate_partition(p, v.l);

  bool fired = false;
  bool complete = true;  // every testable condition certified with exact values
  std::vector<std::string> held;
  bool summarize = parts.size() > 64;
  long long worst_margin = 0;  // max of lhs - rhs over non-fired partitions
  bool have_margin = false;

  for (const auto& part : parts) {
    std::optional<long long> lkb;
    if (part.size() == 1)
      lkb = 0;
    else if (v.linking)
      lkb = lk_between_blocks(*v.linking, part);
    if (!lkb) {
      complete = false;
      push_unique(rep.missing, "linking matrix");
      continue;
    }
    long long ceiling_sum = 0;
    bool blocks_known = true, blocks_exact = true;
    for (const auto& block : part) {
      std::optional<NuInterval> bn = block_nu(data, v, block);
      if (!bn) {
        blocks_known = false;
        push_unique(rep.missing, "nu bounds for block " + block_label(block));
        continue;
      }
      ceiling_sum += bn->exact ? bn->value2() : bn->upper2;
      if (!bn->exact) blocks_exact = false;
    }
    if (!blocks_known) {
      complete = false;
      continue;
    }
    long long lhs = nuL.lower2 - ceiling_sum;
    long long rhs = 2 * *lkb;
    if (lhs > rhs) {
      fired = true;
      rep.certificate.push_back(
          "partition " + partition_label(part) +
          ": lower2(L) - sum of block nu ceilings = " + num(lhs) + " > " +
          num(rhs) + " = 2 lk(blocks)");
    } else {
      if (!(nuL.exact && blocks_exact)) complete = false;
      if (!summarize)
        held.push_back("partition " + partition_label(part) + ": " + num(lhs) +
                       " <= " + num(rhs) + " = 2 lk(blocks)");
      worst_margin = have_margin ? std::max(worst_margin, lhs - rhs)
                                 : lhs - rhs;
      have_margin = true;
    }
  }
  if (summarize && have_margin)
    held.push_back(num(parts.size()) +
                   " partitions checked; tightest margin lhs - rhs = " +
                   num(worst_margin));

  if (data.chi4) {
    if (nuL.exact) {
      long long lhs = static_cast<long long>(nuL.value2()) - v.l;
      long long rhs = -*data.chi4;
      if (lhs != rhs) {
        fired = true;
        rep.certificate.push_back("2nu - l = " + num(lhs) + " != " + num(rhs) +
                                  " = -chi4");
      } else {
        held.push_back("2nu - l = " + num(lhs) + " = -chi4");
      }
    } else {
      complete = false;
      push_unique(rep.missing, "exact nu for the chi4 identity");
    }
  }

  std::optional<long long> slc;
  bool slc_is_exact = false;
  if (data.braid && braid_profile(*data.braid).is_pure) {
    slc = slc_pure(*data.braid).value;
    slc_is_exact = true;
  } else if (data.slc_upper_bound) {
    slc = *data.slc_upper_bound;
  }
  if (slc) {
    if (nuL.exact) {
      long long target = static_cast<long long>(nuL.value2()) - v.l;
      if (*slc < target) {
        fired = true;
        rep.certificate.push_back(std::string("sl_c ") +
                                  (slc_is_exact ? "= " : "<= ") + num(*slc) +
                                  " < " + num(target) + " = 2nu - l");
      } else if (slc_is_exact) {
        held.push_back("sl_c = " + num(*slc) + " >= " + num(target) +
                       " = 2nu - l");
      } else {
        complete = false;
        push_unique(rep.missing,
                    "exact sl_c (only an upper bound was supplied)");
      }
    } else {
      complete = false;
      push_unique(rep.missing, "exact nu for the sl_c comparison");
    }
  }

  if (fired) {
    rep.verdict = Verdict::VIOLATED;
    rep.conclusion = "not concordant to any quasi-positive link";
  } else if (complete) {
    rep.verdict = Verdict::SATISFIED;
    rep.conclusion = "no obstruction found";
    rep.certificate = held;
  } else {
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.conclusion = "test inconclusive: see missing inputs";
    rep.certificate = held;
  }
  return rep;
}

ObstructionReport check_qp(const LinkData& data,
                           const ComponentPartition& partition) {
  ObstructionReport rep;
  rep.test = "quasi-positive";
  LinkView v = make_view(data);
  if (!v.nu)
    throw Error(ErrorKind::MissingInput,
                "nu bounds for the link: supply nu, a braid, or a diagram");
  const NuInterval& nuL = *v.nu;
  rep.provenance.push_back(v.nu_supplied ? "nu(L): supplied"
                                         : "nu(L): computed from the diagram");
  if (v.l < 1)
    throw Error(ErrorKind::MissingInput, "component count not determinable");
  validate_partition(partition, v.l);

  // Additivity hypothesis: nu(L) - sum nu(L_i) = sum lk, all values exact.
  if (!nuL.exact) {
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.conclusion = "additivity hypothesis untestable";
    rep.missing.push_back("exact nu for L");
    return rep;
  }
  std::optional<long long> lkb;
  if (partition.size() == 1)
    lkb = 0;
  else if (v.linking)
    lkb = lk_between_blocks(*v.linking, partition);
  if (!lkb) {
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.conclusion = "additivity hypothesis untestable";
    rep.missing.push_back("linking matrix");
    return rep;
  }
  std::vector<NuInterval> block_nus;
  for (const auto& block : partition) {
    std::optional<NuInterval> bn = block_nu(data, v, block);
    if (!bn) {
      rep.verdict = Verdict::INCONCLUSIVE;
      rep.conclusion = "additivity hypothesis untestable";
      rep.missing.push_back("nu bounds for block " + block_label(block));
      return rep;
    }
    if (!bn->exact) {
      rep.verdict = Verdict::INCONCLUSIVE;
      rep.conclusion = "additivity hypothesis untestable";
      rep.missing.push_back("exact nu for block " + block_label(block));
      return rep;
    }
    block_nus.push_back(*bn);
  }
  long long block_sum = 0;
  for (const auto& bn : block_nus) block_sum += bn.value2();
  long long hyp_lhs = static_cast<long long>(nuL.value2()) - block_sum;
  long long hyp_rhs = 2 * *lkb;
  if (hyp_lhs != hyp_rhs) {
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.conclusion = "additivity hypothesis not met";
    rep.certificate.push_back("2nu(L) - sum 2nu(blocks) = " + num(hyp_lhs) +
                              " != " + num(hyp_rhs) + " = 2 lk(blocks)");
    return rep;
  }
  rep.certificate.push_back("hypothesis: 2nu(L) - sum 2nu(blocks) = " +
                            num(hyp_lhs) + " = 2 lk(blocks)");

  bool fired = false;
  for (size_t bi = 0; bi < partition.size(); ++bi) {
    const auto& block = partition[bi];
    std::optional<long long> slmax;
    if (static_cast<int>(block.size()) == v.l && data.slmax_upper)
      slmax = data.slmax_upper;
    else if (block.size() == 1) {
      size_t i = static_cast<size_t>(block[0]);
      if (i < data.components.size()) slmax = data.components[i].slmax_upper;
    }
    long long target = static_cast<long long>(block_nus[bi].value2()) -
                       static_cast<long long>(block.size());
    if (!slmax) {
      rep.missing.push_back("sl_max upper bound for block " +
                            block_label(block));
      continue;
    }
    if (*slmax < target) {
      fired = true;
      rep.certificate.push_back("block " + block_label(block) + ": sl_max <= " +
                                num(*slmax) + " < " + num(target) +
                                " = 2nu - l");
    } else {
      rep.certificate.push_back("block " + block_label(block) + ": sl_max <= " +
                                num(*slmax) + " >= " + num(target) +
                                " = 2nu - l");
    }
  }
  if (fired) {
    rep.verdict = Verdict::VIOLATED;
    rep.conclusion = "not quasi-positive";
  } else if (rep.missing.empty()) {
    rep.verdict = Verdict::SATISFIED;
    rep.conclusion = "no obstruction found";
  } else {
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.conclusion = "test inconclusive: see missing inputs";
  }
  return rep;
}

ObstructionReport check_positive(const LinkData& data) {
  ObstructionReport rep;
  rep.test = "positive";
  LinkView v = make_view(data);
  if (!v.linking)
    throw Error(ErrorKind::MissingInput,
                "linking matrix required: supply linking, a braid, or a diagram");
  const LinkingMatrix& lk = *v.linking;
  int l = lk.size();
  long long lk_total = lk.total();
  bool fired = false;
  std::vector<std::string> held;

  if (lk.any_negative()) {
    fired = true;
    bool reported = false;
    for (int i = 0; i < l && !reported; ++i)
      for (int j = i + 1; j < l && !reported; ++j)
        if (lk.entries[i][j] < 0) {
          rep.certificate.push_back("negative-linking-entry: lk[" + num(i) +
                                    "][" + num(j) + "] = " +
                                    num(lk.entries[i][j]));
          reported = true;
        }
  } else {
    held.push_back("linking entries all >= 0");
  }

  bool need_split_flag = false;
  if (lk_total == 0) {
    if (!data.completely_split) {
      need_split_flag = true;
    } else if (!*data.completely_split) {
      fired = true;
      rep.certificate.push_back(
          "zero-linking-not-split: lk total = 0 but the link is not "
          "completely split");
    } else {
      held.push_back("lk total = 0 and the link is completely split");
    }
  }

  bool need_wsp = false, need_ssp = false;
  if (data.wsp && data.ssp) {
    if (*data.wsp != *data.ssp) {
      fired = true;
      rep.certificate.push_back("weak-strong-splitting-differ: wsp = " +
                                num(*data.wsp) + " != " + num(*data.ssp) +
                                " = ssp");
    } else {
      held.push_back("wsp = " + num(*data.wsp) + " = ssp");
    }
  } else if (data.wsp) {
    need_ssp = true;
  } else if (data.ssp) {
    need_wsp = true;
  }

  bool comp_us_known = !data.components.empty() &&
                       static_cast<int>(data.components.size()) == l;
  long long comp_u_sum = 0;
  if (comp_us_known)
    for (const auto& c : data.components) {
      if (!c.u) {
        comp_us_known = false;
        break;
      }
      comp_u_sum += *c.u;
    }
  bool need_u = false, need_comp_u = false;
  if (data.u) {
    if (!comp_us_known) {
      need_comp_u = true;
    } else if (*data.u - comp_u_sum != lk_total) {
      fired = true;
      rep.certificate.push_back("unlinking-chain: u - sum u_i = " +
                                num(*data.u - comp_u_sum) + " != " +
                                num(lk_total) + " = lk total");
    } else {
      held.push_back("u - sum u_i = " + num(*data.u - comp_u_sum) +
                     " = lk total");
    }
  } else if (comp_us_known) {
    need_u = true;
  }

  // With no splitting or unlinking scalar supplied at all, only the linking
  // matrix clauses were exercised.
  bool any_scalar = data.wsp || data.ssp || data.u || comp_us_known;
  if (need_wsp || (!any_scalar && !fired)) rep.missing.push_back("wsp");
  if (need_ssp || (!any_scalar && !fired)) rep.missing.push_back("ssp");
  if (need_u || (!any_scalar && !fired)) rep.missing.push_back("u");
  if (need_comp_u) rep.missing.push_back("component-u");
  if (need_split_flag) rep.missing.push_back("completely-split");

  if (fired) {
    rep.verdict = Verdict::VIOLATED;
    rep.conclusion = "not a positive link";
    rep.missing.clear();
  } else if (rep.missing.empty()) {
    rep.verdict = Verdict::SATISFIED;
    rep.conclusion = "no obstruction found";
    rep.certificate = held;
  } else {
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.conclusion = "test inconclusive: supply the missing scalars";
    rep.certificate = held;
  }
  return rep;
}

ObstructionReport check_positive_braid(const LinkData& data) {
  ObstructionReport rep;
  rep.test = "positive-braid";
  LinkDiagram d = resolve_diagram(data);
  DiagramProfile prof = diagram_profile(d);
  if (!prof.is_positive) {
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.conclusion = "test applies to positive diagrams only";
    rep.missing.push_back("not-a-positive-diagram");
    return rep;
  }
  bool fired = false;
  std::vector<std::string> held;

  long long sub_o = 0, sub_nu2 = 0;
  for (int i = 0; i < prof.components_count; ++i) {
    LinkDiagram sub = delete_components(d, {i});
    sub_o += diagram_profile(sub).seifert_circles;
    sub_nu2 += nu_bounds(sub).value2();  // positive, hence homogeneous
  }
  if (prof.seifert_circles != sub_o) {
    fired = true;
    rep.certificate.push_back("seifert-circle-additivity: o(D) = " +
                              num(prof.seifert_circles) + " != " + num(sub_o) +
                              " = sum o(D_i)");
  } else {
    held.push_back("o(D) = " + num(prof.seifert_circles) + " = sum o(D_i)");
  }

  NuInterval n2 = nu_bounds(d);
  if (!n2.exact)
    throw Error(ErrorKind::FormulaInconsistency,
                "positive diagram reported non-homogeneous");
  long long add_lhs = static_cast<long long>(n2.value2()) - sub_nu2;
  long long add_rhs = 2 * prof.lk_total;
  if (add_lhs != add_rhs) {
    fired = true;
    rep.certificate.push_back("nu-additivity: 2nu(L) - sum 2nu(K_i) = " +
                              num(add_lhs) + " != " + num(add_rhs) +
                              " = 2 lk total");
  } else {
    held.push_back("2nu(L) - sum 2nu(K_i) = " + num(add_lhs) +
                   " = 2 lk total");
  }

  if (data.u) {
    if (2 * *data.u != n2.value2()) {
      fired = true;
      rep.certificate.push_back("u-vs-nu: 2u = " + num(2 * *data.u) + " != " +
                                num(n2.value2()) + " = 2nu");
    } else {
      held.push_back("2u = " + num(2 * *data.u) + " = 2nu");
    }
  }

  if (fired) {
    rep.verdict = Verdict::VIOLATED;
    rep.conclusion = "not a positive-braid link";
  } else {
    rep.verdict = Verdict::SATISFIED;
    rep.conclusion = "no obstruction found";
    rep.certificate = held;
  }
  return rep;
}

ObstructionReport check_positive_braid(const DiagramStats& stats,
                                       std::optional<long long> u) {
  ObstructionReport rep;
  rep.test = "positive-braid";
  rep.provenance.push_back("diagram carried as published statistics");
  bool fired = false;
  std::vector<std::string> held;

  if (stats.seifert_circles != stats.component_seifert_total) {
    fired = true;
    rep.certificate.push_back("seifert-circle-additivity: o(D) = " +
                              num(stats.seifert_circles) + " != " +
                              num(stats.component_seifert_total) +
                              " = sum o(D_i)");
  } else {
    held.push_back("o(D) = " + num(stats.seifert_circles) + " = sum o(D_i)");
  }

  // Positive diagram: 2nu = x - o + l.
  long long nu2 = static_cast<long long>(stats.crossings) -
                  stats.seifert_circles + stats.components;
  if (u) {
    if (2 * *u != nu2) {
      fired = true;
      rep.certificate.push_back("u-vs-nu: 2u = " + num(2 * *u) + " != " +
                                num(nu2) + " = 2nu");
    } else {
      held.push_back("2u = " + num(2 * *u) + " = 2nu");
    }
  }

  if (fired) {
    rep.verdict = Verdict::VIOLATED;
    rep.conclusion = "not a positive-braid link";
  } else {
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.conclusion = "per-component nu is not derivable from statistics";
    rep.certificate = held;
    rep.missing.push_back("nu-additivity");
  }
  return rep;
}

AltPureResult classify_alt_pure(const BraidWord& b) {
  BraidProfile p = braid_profile(b);
  if (!p.is_pure)
    throw Error(ErrorKind::NotPure, "classification requires a pure braid");
  if (!p.is_alternating)
    throw Error(ErrorKind::NotAlternating,
                "classification requires an alternating braid word");

  std::vector<int> gen_sign(b.strands + 1, 0);
  std::vector<int> gen_count(b.strands + 1, 0);
  for (int j : b.letters) {
    gen_sign[std::abs(j)] = j > 0 ? 1 : -1;  // single sign by alternation
    gen_count[std::abs(j)] += 1;
  }

  // Strand graph: an edge joins i, i+1 when generator i appears.
  std::vector<int> piece_of(b.strands + 1);
  std::iota(piece_of.begin(), piece_of.end(), 0);
  for (int g = 1; g < b.strands; ++g)
    if (gen_count[g] > 0) {
      int root = piece_of[g];
      int from = piece_of[g + 1];
      if (from != root)
        for (int s = 1; s <= b.strands; ++s)
          if (piece_of[s] == from) piece_of[s] = root;
    }

  AltPureResult r;
  std::map<int, std::vector<int>> groups;
  for (int s = 1; s <= b.strands; ++s) groups[piece_of[s]].push_back(s);
  std::vector<std::vector<int>> pieces;
  for (auto& [root, strands] : groups) pieces.push_back(strands);
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& a, const auto& c) { return a[0] < c[0]; });
  r.pieces = pieces;

  r.qp_concordant = true;
  for (const auto& piece : r.pieces) {
    if (piece.size() > 2) r.qp_concordant = false;
    if (piece.size() == 2 && gen_sign[piece[0]] < 0) r.qp_concordant = false;
  }
  if (r.qp_concordant) {
    for (const auto& piece : r.pieces) {
      if (piece.size() == 1)
        r.factors.push_back("unknot");
      else
        r.factors.push_back("T(2," + std::to_string(gen_count[piece[0]]) +
                            ")");
    }
  }
  r.verdict = r.qp_concordant ? "QP_CONCORDANT" : "NOT_QP_CONCORDANT";
  return r;
}

const char* small_unlinking_family_label(SmallUnlinkingFamily f) {
  switch (f) {
    case SmallUnlinkingFamily::UNLINK:
      return "unlink";
    case SmallUnlinkingFamily::HOPF_SPLIT_UNLINK:
      return "split union of a (possibly empty) unlink and the positive Hopf "
             "link";
    case SmallUnlinkingFamily::TWIST_KNOT_SPLIT_UNLINK:
      return "split union of a (possibly empty) unlink and a non-trivial "
             "positive twist knot";
    case SmallUnlinkingFamily::U2_LINKING_TWO_UNKNOTTED:
      return "(a) positive link with total linking number 2 and unknotted "
             "components";
    case SmallUnlinkingFamily::U2_HOPF_CONNSUM_TWIST:
      return "(b) connected sum of a positive Hopf link and a positive twist "
             "knot";
    case SmallUnlinkingFamily::U2_HOPF_SPLIT_TWIST:
      return "(c) split union of a positive Hopf link and a positive twist "
             "knot";
    case SmallUnlinkingFamily::U2_TWO_TWIST_KNOTS:
      return "(d) split union of two non-trivial positive twist knots";
    case SmallUnlinkingFamily::U2_KNOT_UNKNOTTING_TWO:
      return "(e) positive knot with unknotting number 2";
    case SmallUnlinkingFamily::CONTRADICTION:
      return "CONTRADICTION: data inconsistent with the classification";
  }
  return "CONTRADICTION: data inconsistent with the classification";
}

SmallUnlinkingResult classify_small_unlinking(const LinkData& data) {
  LinkDiagram d = resolve_diagram(data);
  DiagramProfile prof = diagram_profile(d);
  if (!prof.is_positive)
    throw Error(ErrorKind::NotPositive,
                "classification applies to positive links");
  int l = prof.components_count;

  SmallUnlinkingResult r;
  r.lk_total = prof.lk_total;
  r.u = data.u ? *data.u
               : positive_unlinking(d, UnlinkingMode::PerComponent);
  bool comp_supplied = static_cast<int>(data.components.size()) == l;
  long long u_sum = 0;
  for (int i = 0; i < l; ++i) {
    long long ui;
    if (comp_supplied && data.components[i].u)
      ui = *data.components[i].u;
    else
      ui = positive_unlinking(delete_components(d, {i}),
                              UnlinkingMode::Whole);
    r.component_u.push_back(ui);
    u_sum += ui;
  }

  // Chain consistency: u = lk + sum u_i for positive links.
  if (r.lk_total + u_sum != r.u) {
    r.family = SmallUnlinkingFamily::CONTRADICTION;
    r.notes.push_back("u = " + num(r.u) + " but lk + sum u_i = " +
                      num(r.lk_total + u_sum));
    return r;
  }
  r.notes.push_back("u = lk + sum u_i: " + num(r.u) + " = " +
                    num(r.lk_total) + " + " + num(u_sum));

  if (r.u >= 3)
    throw Error(ErrorKind::UnsupportedU,
                "NOT_CLASSIFIED: u = " + num(r.u) +
                    " is outside the classified families (u <= 2)");

  int knotted = 0;
  for (long long ui : r.component_u)
    if (ui > 0) ++knotted;

  if (r.u == 0) {
    r.family = SmallUnlinkingFamily::UNLINK;
  } else if (r.u == 1) {
    r.family = r.lk_total == 1 ? SmallUnlinkingFamily::HOPF_SPLIT_UNLINK
                               : SmallUnlinkingFamily::TWIST_KNOT_SPLIT_UNLINK;
  } else if (r.lk_total == 2) {
    r.family = SmallUnlinkingFamily::U2_LINKING_TWO_UNKNOTTED;
  } else if (r.lk_total == 1) {
    // the unique knotted component either participates in the linking pair
    // (connected sum) or sits split from it
    int ki = -1;
    for (int i = 0; i < l; ++i)
      if (r.component_u[i] > 0) ki = i;
    bool linked = false;
    for (int j = 0; j < l; ++j)
      if (prof.linking.entries[ki][j] != 0) linked = true;
    r.family = linked ? SmallUnlinkingFamily::U2_HOPF_CONNSUM_TWIST
                      : SmallUnlinkingFamily::U2_HOPF_SPLIT_TWIST;
    r.notes.push_back(linked
                          ? "knotted component " + num(ki) +
                                " participates in the linking"
                          : "knotted component " + num(ki) +
                                " is split from the linking pair");
  } else if (knotted == 2) {
    r.family = SmallUnlinkingFamily::U2_TWO_TWIST_KNOTS;
  } else {
    r.family = SmallUnlinkingFamily::U2_KNOT_UNKNOTTING_TWO;
  }
  return r;
}

}  // namespace linkpos
