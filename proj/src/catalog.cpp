#include "linkpos/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <set>

#include "json.hpp"

namespace linkpos {

namespace {

using nlohmann::json;

struct LineCtx {
  const std::string& source;
  size_t line_no;
};

[[noreturn]] void fail(const LineCtx& c, const std::string& msg) {
  throw Error(ErrorKind::SchemaError,
              c.source + ":" + std::to_string(c.line_no) + ": " + msg);
}

std::string need_string(const LineCtx& c, const json& obj,
                        const std::string& key) {
  if (!obj.contains(key) || !obj[key].is_string())
    fail(c, "field '" + key + "' must be a string");
  return obj[key].get<std::string>();
}

std::optional<long long> opt_int(const LineCtx& c, const json& obj,
                                 const std::string& key) {
  if (!obj.contains(key)) return std::nullopt;
  if (!obj[key].is_number_integer())
    fail(c, "field '" + key + "' must be an integer");
  return obj[key].get<long long>();
}

std::optional<bool> opt_bool(const LineCtx& c, const json& obj,
                             const std::string& key) {
  if (!obj.contains(key)) return std::nullopt;
  if (!obj[key].is_boolean())
    fail(c, "field '" + key + "' must be a boolean");
  return obj[key].get<bool>();
}

CatalogEntry parse_entry(const LineCtx& c, const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    fail(c, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(c, "entry must be a JSON object");
  if (!j.contains("schema") || !j["schema"].is_string() ||
      j["schema"].get<std::string>() != "v1")
    fail(c, "unsupported schema (expected \"v1\")");

  CatalogEntry e;
  e.raw_json = line;
  e.name = need_string(c, j, "name");
  if (e.name.empty()) fail(c, "field 'name' must be non-empty");
  if (j.contains("variant")) e.variant = need_string(c, j, "variant");

  if (j.contains("braid")) {
    const json& b = j["braid"];
    if (!b.is_object()) fail(c, "field 'braid' must be an object");
    auto n = opt_int(c, b, "n");
    if (!n) fail(c, "braid: field 'n' must be an integer");
    if (!b.contains("word") || !b["word"].is_array())
      fail(c, "braid: field 'word' must be an array");
    BraidWord w;
    w.strands = static_cast<int>(*n);
    for (const json& x : b["word"]) {
      if (!x.is_number_integer()) fail(c, "braid: letters must be integers");
      w.letters.push_back(static_cast<int>(x.get<long long>()));
    }
    try {
      validate_braid(w);
    } catch (const Error& err) {
      fail(c, std::string("braid: ") + err.what());
    }
    e.braid = std::move(w);
  }

  if (j.contains("pd")) {
    e.pd_text = need_string(c, j, "pd");
    try {
      parse_pd(e.pd_text);
    } catch (const Error& err) {
      fail(c, std::string("pd: ") + err.what());
    }
  }
  if (!e.braid && e.pd_text.empty())
    fail(c, "entry needs a 'braid' or a 'pd'");

  if (j.contains("scalars")) {
    const json& s = j["scalars"];
    if (!s.is_object()) fail(c, "field 'scalars' must be an object");
    e.u = opt_int(c, s, "u");
    e.signature = opt_int(c, s, "signature");
    e.wsp = opt_int(c, s, "wsp");
    e.ssp = opt_int(c, s, "ssp");
    e.chi4 = opt_int(c, s, "chi4");
    e.slmax_upper = opt_int(c, s, "slmax");
    e.has_signature = s.contains("signature");
  }

  if (j.contains("components")) {
    const json& arr = j["components"];
    if (!arr.is_array()) fail(c, "field 'components' must be an array");
    for (const json& cj : arr) {
      if (!cj.is_object()) fail(c, "components entries must be objects");
      ComponentData cd;
      cd.u = opt_int(c, cj, "u");
      cd.positive = opt_bool(c, cj, "positive");
      cd.positive_mirror = opt_bool(c, cj, "positive_mirror");
      cd.slmax_upper = opt_int(c, cj, "slmax");
      if (cj.contains("nu")) {
        const json& nu = cj["nu"];
        if (!nu.is_array() || nu.size() != 3 || !nu[0].is_number_integer() ||
            !nu[1].is_number_integer() || !nu[2].is_boolean())
          fail(c, "component nu must be [lower2, upper2, exact]");
        cd.nu = NuInterval{static_cast<int>(nu[0].get<long long>()),
                           static_cast<int>(nu[1].get<long long>()),
                           nu[2].get<bool>(),
                           {}};
      }
      if (cj.contains("positive")) e.has_component_positive = true;
      e.components.push_back(std::move(cd));
    }
  }

  if (j.contains("flags")) {
    const json& f = j["flags"];
    if (!f.is_object()) fail(c, "field 'flags' must be an object");
    e.positive_expected = opt_bool(c, f, "positive_expected").value_or(false);
    e.braid_positive_expected =
        opt_bool(c, f, "braid_positive_expected").value_or(false);
    e.completely_split = opt_bool(c, f, "completely_split").value_or(false);
    if (f.contains("fibred")) {
      e.fibred = opt_bool(c, f, "fibred");
      e.has_fibred = true;
    }
  }

  if (j.contains("notes")) e.notes = need_string(c, j, "notes");
  return e;
}

}  // namespace

std::vector<CatalogEntry> load_catalog_stream(std::istream& in,
                                              const std::string& source) {
  std::vector<CatalogEntry> entries;
  std::set<std::string> names;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    LineCtx c{source, line_no};
    CatalogEntry e = parse_entry(c, line);
    if (!names.insert(e.name).second)
      throw Error(ErrorKind::DuplicateName,
                  source + ":" + std::to_string(line_no) +
                      ": duplicate name '" + e.name + "'");
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw Error(ErrorKind::BadParameter,
                "cannot open catalog file '" + path + "'");
  return load_catalog_stream(f, path);
}

std::string serialize_catalog(const std::vector<CatalogEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += e.raw_json;
    out += "\n";
  }
  return out;
}

BuiltinObject builtin_example(const std::string& name, std::optional<int> k) {
  auto need_k = [&](int lo) {
    if (!k)
      throw Error(ErrorKind::BadParameter,
                  "'" + name + "' requires a parameter k >= " +
                      std::to_string(lo));
    if (*k < lo)
      throw Error(ErrorKind::BadParameter,
                  "'" + name + "' requires k >= " + std::to_string(lo) +
                      ", got " + std::to_string(*k));
    return *k;
  };
  auto no_k = [&]() {
    if (k)
      throw Error(ErrorKind::BadParameter,
                  "'" + name + "' takes no parameter");
  };
  if (name == "Dk") {
    int kk = need_k(1);
    return mirror_diagram(make_rational({2 * kk, 1, 2 * kk}));
  }
  if (name == "fig3") {
    no_k();
    return BraidWord{4, {2, 2, 2, 1, 3, 2, 1, 3}};
  }
  if (name == "borromean") {
    no_k();
    return BraidWord{3, {1, -2, 1, -2, 1, -2}};
  }
  if (name == "torus2n") {
    int kk = need_k(1);
    return BraidWord{2, std::vector<int>(2 * kk, 1)};
  }
  if (name == "hopf") {
    no_k();
    return BraidWord{2, {1, 1}};
  }
  throw Error(ErrorKind::UnknownExample, "unknown builtin '" + name + "'");
}

DiagramStats figure5_stats() { return DiagramStats{12, 6, 4, 2, 4}; }

LinkData entry_link_data(const CatalogEntry& e) {
  LinkData d;
  if (e.braid)
    d.braid = e.braid;
  else
    d.diagram = parse_pd(e.pd_text);
  d.signature = e.signature;
  d.chi4 = e.chi4;
  d.u = e.u;
  d.wsp = e.wsp;
  d.ssp = e.ssp;
  d.slmax_upper = e.slmax_upper;
  d.completely_split = e.completely_split;
  d.components = e.components;
  return d;
}

std::vector<ObstructionReport> analyze_entry(const CatalogEntry& e) {
  LinkData data = entry_link_data(e);
  LinkDiagram d = resolve_diagram(data);
  int l = static_cast<int>(d.components.size());
  std::vector<ObstructionReport> out;
  out.push_back(check_concordance_qp(data, {}));
  out.push_back(check_qp(data, singleton_partition(l)));
  out.push_back(check_positive(data));
  out.push_back(check_positive_braid(data));
  return out;
}

namespace {

constexpr const char* kCheck = "✓";
constexpr const char* kCross = "✗";
constexpr const char* kDash = "—";
constexpr const char* kSigma = "σ";

size_t cp_len(const std::string& s) {
  size_t n = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++n;
  return n;
}

std::string ljust(const std::string& s, size_t width) {
  size_t n = cp_len(s);
  return n >= width ? s : s + std::string(width - n, ' ');
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

Verdict verdict_of(const std::vector<ObstructionReport>& reports,
                   const std::string& test) {
  for (const auto& r : reports)
    if (r.test == test) return r.verdict;
  return Verdict::INCONCLUSIVE;
}

}  // namespace

TableDocument render_table(
    const std::vector<CatalogEntry>& entries,
    const std::vector<std::vector<ObstructionReport>>& reports) {
  if (entries.size() != reports.size())
    throw Error(ErrorKind::BadParameter,
                "one report list per catalog entry required");
  std::vector<size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return entries[a].name < entries[b].name;
  });

  const std::array<std::string, 5> header = {"Name", "P", "1.6", "BP", "1.9"};
  std::vector<std::array<std::string, 5>> cells;
  for (size_t i : order) {
    const CatalogEntry& e = entries[i];
    Verdict v16 = verdict_of(reports[i], "positive");
    Verdict v19 = verdict_of(reports[i], "positive-braid");
    std::string p = e.positive_expected ? kCheck : kCross;
    std::string bp = e.braid_positive_expected ? kCheck : kCross;
    std::string s16 = e.positive_expected
                          ? kDash
                          : (v16 == Verdict::VIOLATED ? kCheck : kCross);
    std::string s19 = (e.braid_positive_expected || !e.positive_expected)
                          ? kDash
                          : (v19 == Verdict::VIOLATED ? kCheck : kCross);
    if (!e.positive_expected && s16 == kCross) {
      if (e.has_signature) p += std::string("^") + kSigma;
      if (e.has_component_positive) p += "^c";
    }
    if (!e.braid_positive_expected && s19 == kCross && e.has_fibred)
      bp += "^f";
    cells.push_back({e.name, p, s16, bp, s19});
  }

  std::array<size_t, 5> widths;
  for (size_t i = 0; i < 5; ++i) {
    widths[i] = cp_len(header[i]);
    for (const auto& row : cells) widths[i] = std::max(widths[i], cp_len(row[i]));
  }
  auto fmt = [&](const std::array<std::string, 5>& row) {
    std::string line;
    for (size_t i = 0; i < 5; ++i) {
      if (i) line += " | ";
      line += ljust(row[i], widths[i]);
    }
    return rstrip(line);
  };
  std::string padded_header;
  for (size_t i = 0; i < 5; ++i) {
    if (i) padded_header += " | ";
    padded_header += ljust(header[i], widths[i]);
  }
  std::string sep;
  for (char ch : padded_header) sep += (ch == '|') ? '+' : '-';

  TableDocument doc;
  doc.text = fmt(header) + "\n" + sep + "\n";
  for (const auto& row : cells) doc.text += fmt(row) + "\n";

  auto csv_cell = [](const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos)
      return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += "\"\"";
      else out += ch;
    }
    return out + "\"";
  };
  auto csv_row = [&](const std::array<std::string, 5>& row) {
    std::string line;
    for (size_t i = 0; i < 5; ++i) {
      if (i) line += ",";
      line += csv_cell(row[i]);
    }
    return line;
  };
  doc.csv = csv_row(header) + "\n";
  for (const auto& row : cells) doc.csv += csv_row(row) + "\n";
  return doc;
}

}  // namespace linkpos
