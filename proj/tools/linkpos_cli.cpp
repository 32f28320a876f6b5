#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "linkpos/braid.hpp"
#include "linkpos/catalog.hpp"
#include "linkpos/diagram.hpp"
#include "linkpos/errors.hpp"
#include "linkpos/invariants.hpp"
#include "linkpos/obstruct.hpp"

namespace {

using namespace linkpos;

// ---------------------------------------------------------------------------
// Input resolution. One argument names the link: inline braid text
// ("B3: 1 -2 1"), inline PD text ("X[...] ... components: ..."), a builtin
// ("builtin:Name" or "builtin:Name:k"), or a file whose contents take any of
// those forms.

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

bool looks_inline(const std::string& s) {
  std::string t = trim(s);
  if (t.rfind("builtin:", 0) == 0) return true;
  if (t.find("X[") != std::string::npos) return true;
  if (t.find("components:") != std::string::npos) return true;
  if (!t.empty() && t[0] == 'B') {
    size_t j = 1;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    if (j > 1 && j < t.size() && t[j] == ':') return true;
  }
  return false;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw Error(ErrorKind::BadParameter,
                "cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

BuiltinObject parse_builtin(const std::string& text) {
  std::string rest = text.substr(8);  // past "builtin:"
  std::optional<int> k;
  size_t colon = rest.find(':');
  std::string name =
      colon == std::string::npos ? rest : rest.substr(0, colon);
  if (colon != std::string::npos) {
    std::string kt = rest.substr(colon + 1);
    try {
      size_t used = 0;
      int v = std::stoi(kt, &used);
      if (used != kt.size()) throw std::invalid_argument(kt);
      k = v;
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadParameter,
                  "builtin parameter '" + kt + "' is not an integer");
    }
  }
  return builtin_example(name, k);
}

struct ResolvedInput {
  std::optional<BraidWord> braid;
  std::optional<LinkDiagram> diagram;
};

ResolvedInput resolve_input(const std::string& arg) {
  std::string text = looks_inline(arg) ? arg : slurp(arg);
  std::string t = trim(text);
  ResolvedInput r;
  if (t.rfind("builtin:", 0) == 0) {
    BuiltinObject obj = parse_builtin(t);
    if (std::holds_alternative<BraidWord>(obj))
      r.braid = std::get<BraidWord>(obj);
    else
      r.diagram = std::get<LinkDiagram>(obj);
  } else if (t.find("X[") != std::string::npos ||
             t.find("components:") != std::string::npos) {
    r.diagram = parse_pd(t);
  } else {
    r.braid = parse_braid(t);
  }
  return r;
}

BraidWord require_braid(const ResolvedInput& in, const std::string& what) {
  if (!in.braid)
    throw Error(ErrorKind::BadParameter, what + " requires a braid input");
  return *in.braid;
}

LinkDiagram working_diagram(const ResolvedInput& in) {
  if (in.braid) return braid_closure(*in.braid);
  return *in.diagram;
}

// ---------------------------------------------------------------------------
// Small parsers and printers.

std::vector<long long> parse_int_list(const std::string& text,
                                      const std::string& what) {
  std::vector<long long> out;
  std::string t = text;
  for (char& ch : t)
    if (ch == ',') ch = ' ';
  std::istringstream ss(t);
  std::string tok;
  while (ss >> tok) {
    try {
      size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadParameter,
                  what + ": '" + tok + "' is not an integer");
    }
  }
  if (out.empty())
    throw Error(ErrorKind::BadParameter, what + ": empty list");
  return out;
}

// "0|1 2" -> {{0},{1,2}}; indices are 0-based component numbers.
ComponentPartition parse_partition(const std::string& text) {
  ComponentPartition part;
  std::string block;
  std::istringstream ss(text);
  while (std::getline(ss, block, '|')) {
    std::vector<long long> ids = parse_int_list(block, "partition block");
    std::vector<int> blk(ids.begin(), ids.end());
    part.push_back(blk);
  }
  if (part.empty())
    throw Error(ErrorKind::InvalidPartition, "empty partition");
  return part;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string strand_sets_text(const std::vector<std::vector<int>>& sets) {
  std::string s;
  for (const auto& set : sets) s += "(" + join_ints(set) + ")";
  return s;
}

void print_matrix(const LinkingMatrix& m) {
  std::cout << "linking:\n";
  for (const auto& row : m.entries) std::cout << "  " << join_ints(row) << "\n";
  std::cout << "lk-total: " << m.total() << "\n";
}

void print_report(const ObstructionReport& r, bool quiet) {
  std::string text = r.to_text();
  if (quiet) {
    std::string filtered;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
      if (line.rfind("  provenance:", 0) != 0) filtered += line + "\n";
    text = filtered;
  }
  std::cout << text;
}

// ---------------------------------------------------------------------------
// Option bundles shared by the obstruction subcommands.

struct ScalarOpts {
  std::optional<long long> u, wsp, ssp, chi4, slmax, slc;
  std::optional<bool> split;
  std::optional<std::string> comp_u, comp_slmax;
};

void apply_scalars(LinkData& d, const ScalarOpts& s) {
  d.u = s.u;
  d.wsp = s.wsp;
  d.ssp = s.ssp;
  d.chi4 = s.chi4;
  d.slmax_upper = s.slmax;
  d.slc_upper_bound = s.slc;
  d.completely_split = s.split;
  std::vector<long long> cu, cs;
  if (s.comp_u) cu = parse_int_list(*s.comp_u, "--comp-u");
  if (s.comp_slmax) cs = parse_int_list(*s.comp_slmax, "--comp-slmax");
  size_t n = std::max(cu.size(), cs.size());
  if (n > 0) {
    d.components.resize(n);
    for (size_t i = 0; i < cu.size(); ++i) d.components[i].u = cu[i];
    for (size_t i = 0; i < cs.size(); ++i)
      d.components[i].slmax_upper = cs[i];
  }
}

LinkData link_data_from(const ResolvedInput& in, const ScalarOpts& s) {
  LinkData d;
  d.braid = in.braid;
  d.diagram = in.diagram;
  apply_scalars(d, s);
  return d;
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

void run_braid_profile(const std::string& input) {
  BraidWord b = require_braid(resolve_input(input), "braid profile");
  BraidProfile p = braid_profile(b);
  std::cout << "braid: " << serialize_braid(b) << "\n";
  std::cout << "strands: " << p.strands << "\n";
  std::cout << "length: " << p.length << "\n";
  std::cout << "writhe: " << p.writhe << "\n";
  std::cout << "self-linking: " << p.self_linking << "\n";
  std::cout << "permutation: " << join_ints(p.permutation) << "\n";
  std::cout << "components: " << p.component_cycles.size() << "\n";
  std::cout << "cycles: " << strand_sets_text(p.component_cycles) << "\n";
  std::cout << "positive: " << yesno(p.is_positive) << "\n";
  std::cout << "pure: " << yesno(p.is_pure) << "\n";
  std::cout << "alternating: " << yesno(p.is_alternating) << "\n";
  std::cout << "nonsplit-alternating: " << yesno(p.is_nonsplit_alternating)
            << "\n";
  print_matrix(braid_linking_matrix(b));
}

void run_braid_sub(const std::string& input, const std::string& keep) {
  BraidWord b = require_braid(resolve_input(input), "braid sub");
  std::vector<long long> ids = parse_int_list(keep, "--keep");
  std::vector<int> cycles(ids.begin(), ids.end());
  std::cout << "sub-braid: " << serialize_braid(sub_braid(b, cycles)) << "\n";
}

std::string factors_text(
    const std::vector<QuasipositiveEmbedding::Factor>& fs) {
  std::string s;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (i) s += " ";
    if (fs[i].conjugator.empty())
      s += std::to_string(fs[i].generator);
    else
      s += "(" + join_ints(fs[i].conjugator) + "; " +
           std::to_string(fs[i].generator) + ")";
  }
  return s;
}

void run_braid_embed(const std::string& input) {
  BraidWord b = require_braid(resolve_input(input), "braid embed");
  QuasipositiveEmbedding e = embed_quasipositive(b);
  std::cout << "input: " << serialize_braid(e.input) << "\n";
  std::cout << "output: " << serialize_braid(e.output) << "\n";
  for (const auto& [pos, word] : e.insertions)
    std::cout << "insertion after letter " << pos << ": " << join_ints(word)
              << "\n";
  std::cout << "new-component-linking: " << e.new_component_linking << "\n";
  std::cout << "decomposition: " << factors_text(e.decomposition) << "\n";
  if (decomposition_product(e.decomposition) != e.output.letters)
    throw Error(ErrorKind::FormulaInconsistency,
                "decomposition product does not reproduce the output word");
  std::cout << "product-check: ok\n";
}

void run_braid_keylemma(const std::string& input,
                        const std::optional<std::string>& blocks) {
  BraidWord b = require_braid(resolve_input(input), "braid keylemma");
  BraidProfile p = braid_profile(b);
  ComponentPartition part =
      blocks ? parse_partition(*blocks)
             : singleton_partition(
                   static_cast<int>(p.component_cycles.size()));
  KeyLemmaRecord r = key_lemma_identity(b, part);
  std::string label;
  for (const auto& blk : part) label += "{" + join_ints(blk) + "}";
  std::cout << "blocks: " << label << "\n";
  std::cout << "total-self-linking: " << r.total_self_linking << "\n";
  std::cout << "block-self-linking:";
  for (long long v : r.block_self_linking) std::cout << " " << v;
  std::cout << "\n";
  std::cout << "lhs: " << r.lhs << "\n";
  std::cout << "rhs: " << r.rhs << "\n";
  std::cout << "holds: " << yesno(r.holds) << "\n";
}

void run_diagram_profile(const std::string& input) {
  DiagramProfile p = diagram_profile(working_diagram(resolve_input(input)));
  std::cout << "components: " << p.components_count << "\n";
  std::cout << "crossings: " << p.crossings_count << "\n";
  std::cout << "writhe: " << p.writhe << "\n";
  std::cout << "seifert-circles: " << p.seifert_circles << "\n";
  std::cout << "s-plus: " << p.s_plus << "\n";
  std::cout << "s-minus: " << p.s_minus << "\n";
  std::cout << "flatten-circles: " << p.flatten_circles << "\n";
  std::cout << "positive: " << yesno(p.is_positive) << "\n";
  std::cout << "alternating: " << yesno(p.is_alternating) << "\n";
  std::cout << "simply-linked: " << yesno(p.is_simply_linked) << "\n";
  std::cout << "connected: " << yesno(p.is_connected) << "\n";
  print_matrix(p.linking);
}

void run_diagram_seifert(const std::string& input) {
  SeifertReport r = seifert_analysis(working_diagram(resolve_input(input)));
  std::cout << "homogeneous: " << yesno(r.is_homogeneous) << "\n";
  std::cout << "vertices: " << r.vertices << "\n";
  std::cout << "reduced-edges: " << r.reduced_edges << "\n";
  std::cout << "reduced-is-tree: " << yesno(r.reduced_is_tree) << "\n";
  std::cout << "blocks: " << r.block_count << "\n";
  std::cout << "fibred-positive: "
            << fibred_verdict_name(r.fibred_positive_verdict) << "\n";
}

void run_nu_bounds(const std::string& input, bool quiet) {
  NuInterval n = nu_bounds(working_diagram(resolve_input(input)));
  std::cout << "lower2: " << n.lower2 << "\n";
  std::cout << "upper2: " << n.upper2 << "\n";
  std::cout << "exact: " << yesno(n.exact) << "\n";
  if (n.exact) std::cout << "2nu: " << n.value2() << "\n";
  if (!quiet)
    for (const auto& note : n.provenance)
      std::cout << "note: " << note << "\n";
}

void run_obstruct_qp_conc(const std::string& input, const ScalarOpts& s,
                          const std::vector<std::string>& partitions,
                          bool quiet) {
  LinkData d = link_data_from(resolve_input(input), s);
  std::vector<ComponentPartition> parts;
  for (const auto& p : partitions) parts.push_back(parse_partition(p));
  print_report(check_concordance_qp(d, parts), quiet);
}

void run_obstruct_qp(const std::string& input, const ScalarOpts& s,
                     const std::optional<std::string>& partition,
                     bool quiet) {
  ResolvedInput in = resolve_input(input);
  LinkData d = link_data_from(in, s);
  ComponentPartition part;
  if (partition) {
    part = parse_partition(*partition);
  } else {
    LinkDiagram dia = working_diagram(in);
    part = singleton_partition(static_cast<int>(dia.components.size()));
  }
  print_report(check_qp(d, part), quiet);
}

void run_obstruct_positive(const std::string& input, const ScalarOpts& s,
                           bool quiet) {
  print_report(check_positive(link_data_from(resolve_input(input), s)),
               quiet);
}

void run_obstruct_braid_positive(const std::optional<std::string>& input,
                                 const std::optional<std::string>& stats,
                                 const ScalarOpts& s, bool quiet) {
  if (static_cast<bool>(input) == static_cast<bool>(stats))
    throw Error(ErrorKind::BadParameter,
                "exactly one of <input> or --stats is required");
  if (stats) {
    std::vector<long long> v = parse_int_list(*stats, "--stats");
    if (v.size() != 5)
      throw Error(ErrorKind::BadParameter,
                  "--stats needs 5 integers: x,o,sum-o,l,lk");
    DiagramStats st{static_cast<int>(v[0]), static_cast<int>(v[1]),
                    static_cast<int>(v[2]), static_cast<int>(v[3]), v[4]};
    print_report(check_positive_braid(st, s.u), quiet);
    return;
  }
  print_report(check_positive_braid(link_data_from(resolve_input(*input), s)),
               quiet);
}

void run_obstruct_alt_pure(const std::string& input) {
  BraidWord b = require_braid(resolve_input(input), "obstruct alt-pure");
  AltPureResult r = classify_alt_pure(b);
  std::cout << r.verdict << "\n";
  std::cout << "pieces: " << strand_sets_text(r.pieces) << "\n";
  if (!r.factors.empty()) {
    std::cout << "factors: ";
    for (size_t i = 0; i < r.factors.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << r.factors[i];
    }
    std::cout << "\n";
  }
}

void run_table(const std::optional<std::string>& catalog,
               const std::string& format) {
  std::string path;
  if (catalog) {
    path = *catalog;
  } else if (const char* env = std::getenv("LINKPOS_CATALOG")) {
    path = env;
  } else {
    path = "data/table1.jsonl";
  }
  std::vector<CatalogEntry> entries = load_catalog(path);
  std::vector<std::vector<ObstructionReport>> reports;
  reports.reserve(entries.size());
  for (const auto& e : entries) reports.push_back(analyze_entry(e));
  TableDocument doc = render_table(entries, reports);
  std::cout << (format == "csv" ? doc.csv : doc.text);
}

void add_scalar_options(CLI::App* cmd, ScalarOpts& s) {
  cmd->add_option("--u", s.u, "unlinking number u(L)");
  cmd->add_option("--wsp", s.wsp, "weak splitting number");
  cmd->add_option("--ssp", s.ssp, "strong splitting number");
  cmd->add_option("--chi4", s.chi4, "smooth 4-genus Euler characteristic");
  cmd->add_option("--slmax", s.slmax, "upper bound on sl_max(L)");
  cmd->add_option("--slc-upper", s.slc, "upper bound on sl_c(L)");
  cmd->add_option("--split", s.split,
                  "whether the link is completely split (yes/no)");
  cmd->add_option("--comp-u", s.comp_u,
                  "per-component unlinking numbers, comma-separated");
  cmd->add_option("--comp-slmax", s.comp_slmax,
                  "per-component sl_max upper bounds, comma-separated");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial positivity obstructions for braids and links"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may trail the subcommand
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "suppress provenance notes");

  std::string in_profile, in_sub, in_embed, in_keylemma, in_dprofile,
      in_seifert, in_nu, in_qpc, in_qp, in_pos, in_alt;
  std::optional<std::string> in_bp;
  std::string keep;
  std::optional<std::string> blocks, qp_partition, bp_stats, table_catalog;
  std::vector<std::string> qpc_partitions;
  std::string table_format = "text";
  ScalarOpts s_qpc, s_qp, s_pos, s_bp;

  CLI::App* braid = app.add_subcommand("braid", "braid word operations");
  braid->require_subcommand(1);
  CLI::App* bprof = braid->add_subcommand("profile", "word statistics");
  bprof->add_option("input", in_profile, "braid text, builtin, or file")
      ->required();
  bprof->callback([&] { run_braid_profile(in_profile); });
  CLI::App* bsub =
      braid->add_subcommand("sub", "restriction to component cycles");
  bsub->add_option("input", in_sub, "braid text, builtin, or file")
      ->required();
  bsub->add_option("--keep", keep, "cycle indices to keep (0-based)")
      ->required();
  bsub->callback([&] { run_braid_sub(in_sub, keep); });
  CLI::App* bemb =
      braid->add_subcommand("embed", "quasi-positive embedding");
  bemb->add_option("input", in_embed, "braid text, builtin, or file")
      ->required();
  bemb->callback([&] { run_braid_embed(in_embed); });
  CLI::App* bkey = braid->add_subcommand(
      "keylemma", "self-linking partition identity");
  bkey->add_option("input", in_keylemma, "braid text, builtin, or file")
      ->required();
  bkey->add_option("--blocks", blocks,
                   "partition of cycle indices, e.g. \"0|1 2\"");
  bkey->callback([&] { run_braid_keylemma(in_keylemma, blocks); });

  CLI::App* diagram =
      app.add_subcommand("diagram", "PD diagram operations");
  diagram->require_subcommand(1);
  CLI::App* dprof = diagram->add_subcommand("profile", "diagram statistics");
  dprof->add_option("input", in_dprofile, "PD text, braid, builtin, or file")
      ->required();
  dprof->callback([&] { run_diagram_profile(in_dprofile); });
  CLI::App* dseif =
      diagram->add_subcommand("seifert", "Seifert graph analysis");
  dseif->add_option("input", in_seifert, "PD text, braid, builtin, or file")
      ->required();
  dseif->callback([&] { run_diagram_seifert(in_seifert); });

  CLI::App* nu = app.add_subcommand("nu", "slice-torus invariant bounds");
  nu->require_subcommand(1);
  CLI::App* nub = nu->add_subcommand("bounds", "2nu bounds from a diagram");
  nub->add_option("input", in_nu, "PD text, braid, builtin, or file")
      ->required();
  nub->callback([&] { run_nu_bounds(in_nu, quiet); });

  CLI::App* obstruct =
      app.add_subcommand("obstruct", "positivity obstruction tests");
  obstruct->require_subcommand(1);
  CLI::App* qpc = obstruct->add_subcommand(
      "qp-conc", "concordance to quasi-positive links");
  qpc->add_option("input", in_qpc, "PD text, braid, builtin, or file")
      ->required();
  qpc->add_option("--partition", qpc_partitions,
                  "partition to test, e.g. \"0|1 2\" (repeatable; default: "
                  "all partitions)");
  add_scalar_options(qpc, s_qpc);
  qpc->callback(
      [&] { run_obstruct_qp_conc(in_qpc, s_qpc, qpc_partitions, quiet); });
  CLI::App* qp = obstruct->add_subcommand("qp", "quasi-positivity");
  qp->add_option("input", in_qp, "PD text, braid, builtin, or file")
      ->required();
  qp->add_option("--partition", qp_partition,
                 "partition to test (default: singletons)");
  add_scalar_options(qp, s_qp);
  qp->callback([&] { run_obstruct_qp(in_qp, s_qp, qp_partition, quiet); });
  CLI::App* pos = obstruct->add_subcommand("positive", "positivity");
  pos->add_option("input", in_pos, "PD text, braid, builtin, or file")
      ->required();
  add_scalar_options(pos, s_pos);
  pos->callback([&] { run_obstruct_positive(in_pos, s_pos, quiet); });
  CLI::App* bpos =
      obstruct->add_subcommand("braid-positive", "braid-positivity");
  bpos->add_option("input", in_bp, "PD text, braid, builtin, or file");
  bpos->add_option("--stats", bp_stats,
                   "published statistics x,o,sum-o,l,lk instead of a diagram");
  add_scalar_options(bpos, s_bp);
  bpos->callback(
      [&] { run_obstruct_braid_positive(in_bp, bp_stats, s_bp, quiet); });
  CLI::App* alt = obstruct->add_subcommand(
      "alt-pure", "alternating pure-braid classification");
  alt->add_option("input", in_alt, "braid text, builtin, or file")
      ->required();
  alt->callback([&] { run_obstruct_alt_pure(in_alt); });

  CLI::App* table =
      app.add_subcommand("table", "obstruction table from a catalog");
  table->add_option("--catalog", table_catalog,
                    "catalog path (default: LINKPOS_CATALOG or "
                    "data/table1.jsonl)");
  table->add_option("--format", table_format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  table->callback([&] { run_table(table_catalog, table_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind_name() << ": " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
