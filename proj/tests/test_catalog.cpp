#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "linkpos/catalog.hpp"

using namespace linkpos;

namespace {

const char* kCatalogPath = "data/table1.jsonl";

std::vector<CatalogEntry> bundled() { return load_catalog(kCatalogPath); }

const CatalogEntry& by_name(const std::vector<CatalogEntry>& entries,
                            const std::string& name) {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw std::runtime_error("missing entry " + name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ErrorKind kind_of_load(const std::string& jsonl) {
  std::istringstream in(jsonl);
  try {
    load_catalog_stream(in, "test");
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::MissingInput;  // sentinel: nothing thrown
}

}  // namespace

TEST_CASE("bundled catalog loads with unique names") {
  auto entries = bundled();
  CHECK(entries.size() == 44);
  std::set<std::string> names;
  for (const auto& e : entries) names.insert(e.name);
  CHECK(names.size() == entries.size());
}

TEST_CASE("representative rows carry the published data") {
  auto entries = bundled();

  const CatalogEntry& hopf = by_name(entries, "L2a1{0}");
  REQUIRE(hopf.braid.has_value());
  CHECK(*hopf.braid == BraidWord{2, {1, 1}});
  CHECK(hopf.u == 1);
  CHECK(hopf.positive_expected);
  CHECK(hopf.braid_positive_expected);
  CHECK(!hopf.has_signature);

  const CatalogEntry& splitting = by_name(entries, "L7a1{0}");
  CHECK(splitting.wsp == 2);
  CHECK(splitting.ssp == 3);
  CHECK(splitting.u == 2);

  const CatalogEntry& componentwise = by_name(entries, "L7a2{1}");
  CHECK(componentwise.has_component_positive);
  REQUIRE(componentwise.components.size() == 2);
  CHECK(componentwise.components[1].positive == false);
  CHECK(componentwise.components[1].positive_mirror == true);

  CHECK(by_name(entries, "L6a1{0}").has_signature);
  const CatalogEntry& fib = by_name(entries, "L6a1{1}");
  CHECK(fib.has_fibred);
  CHECK(fib.fibred == false);
}

TEST_CASE("serialize then reload is the identity") {
  auto entries = bundled();
  std::istringstream in(serialize_catalog(entries));
  auto again = load_catalog_stream(in, "roundtrip");
  REQUIRE(again.size() == entries.size());
  for (size_t i = 0; i < entries.size(); ++i) {
    CHECK(again[i].name == entries[i].name);
    CHECK(again[i].raw_json == entries[i].raw_json);
  }
}

TEST_CASE("schema violations are rejected with line numbers") {
  CHECK(kind_of_load("{not json") == ErrorKind::SchemaError);
  CHECK(kind_of_load(R"({"schema": "v2", "name": "X", "braid": {"n": 2, "word": [1]}})") ==
        ErrorKind::SchemaError);
  CHECK(kind_of_load(R"({"schema": "v1", "braid": {"n": 2, "word": [1]}})") ==
        ErrorKind::SchemaError);
  CHECK(kind_of_load(R"({"schema": "v1", "name": "X"})") ==
        ErrorKind::SchemaError);

  std::string dup = R"({"schema": "v1", "name": "X", "braid": {"n": 2, "word": [1]}})";
  CHECK(kind_of_load(dup + "\n" + dup) == ErrorKind::DuplicateName);

  // The reported position is the 1-based source line.
  std::istringstream in("\n\n{bad");
  try {
    load_catalog_stream(in, "lines");
    FAIL("expected SchemaError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("lines:3:", 0) == 0);
  }

  CHECK_THROWS_AS(load_catalog("no/such/file.jsonl"), Error);
}

TEST_CASE("builtin examples") {
  auto torus = std::get<BraidWord>(builtin_example("torus2n", 2));
  CHECK(torus == BraidWord{2, {1, 1, 1, 1}});
  CHECK(std::get<BraidWord>(builtin_example("hopf")) == BraidWord{2, {1, 1}});
  CHECK(std::get<BraidWord>(builtin_example("borromean")) ==
        BraidWord{3, {1, -2, 1, -2, 1, -2}});

  auto whitehead = std::get<LinkDiagram>(builtin_example("Dk", 1));
  DiagramProfile p = diagram_profile(whitehead);
  CHECK(p.components_count == 2);
  CHECK(p.crossings_count == 5);
  CHECK(p.lk_total == 0);
  CHECK(p.is_alternating);

  auto kinds = [](const std::string& name, std::optional<int> k) {
    try {
      builtin_example(name, k);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::MissingInput;  // sentinel
  };
  CHECK(kinds("nope", std::nullopt) == ErrorKind::UnknownExample);
  CHECK(kinds("Dk", std::nullopt) == ErrorKind::BadParameter);
  CHECK(kinds("Dk", 0) == ErrorKind::BadParameter);
  CHECK(kinds("hopf", 2) == ErrorKind::BadParameter);
}

TEST_CASE("figure statistics constants") {
  DiagramStats s = figure5_stats();
  CHECK(s.crossings == 12);
  CHECK(s.seifert_circles == 6);
  CHECK(s.component_seifert_total == 4);
  CHECK(s.components == 2);
  CHECK(s.lk_total == 4);
}

TEST_CASE("entry analysis matches the expectation columns") {
  auto entries = bundled();

  auto verdicts = [&](const std::string& name) {
    return analyze_entry(by_name(entries, name));
  };

  // Positive braid closure: nothing fires anywhere.
  auto hopf = verdicts("L2a1{0}");
  REQUIRE(hopf.size() == 4);
  CHECK(hopf[0].test == "concordance-quasi-positive");
  CHECK(hopf[1].test == "quasi-positive");
  CHECK(hopf[2].test == "positive");
  CHECK(hopf[3].test == "positive-braid");
  for (const auto& r : hopf) CHECK(r.verdict != Verdict::VIOLATED);
  CHECK(hopf[3].verdict == Verdict::SATISFIED);

  // Positive but not a positive-braid link: only the braid test fires.
  auto antiparallel = verdicts("L4a1{0}");
  CHECK(antiparallel[2].verdict != Verdict::VIOLATED);
  CHECK(antiparallel[3].verdict == Verdict::VIOLATED);

  // Zero linking matrix but nonsplit: positivity fires.
  auto nonsplit = verdicts("L5a1{0}");
  CHECK(nonsplit[2].verdict == Verdict::VIOLATED);
}

TEST_CASE("table rendering is byte-deterministic") {
  auto entries = bundled();
  std::vector<std::vector<ObstructionReport>> reports;
  reports.reserve(entries.size());
  for (const auto& e : entries) reports.push_back(analyze_entry(e));

  TableDocument doc = render_table(entries, reports);
  CHECK(doc.text == read_file("tests/golden/table1.txt"));
  CHECK(doc.csv == read_file("tests/golden/table1.csv"));

  TableDocument empty = render_table({}, {});
  CHECK(empty.csv == "Name,P,1.6,BP,1.9\n");
  CHECK(empty.text.rfind("Name", 0) == 0);
}
