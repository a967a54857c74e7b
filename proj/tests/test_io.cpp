#include <catch2/catch_amalgamated.hpp>
#include <fstream>

#include "helpers.hpp"
#include "statesurf/corpus.hpp"
#include "statesurf/json_io.hpp"

using namespace statesurf;
using namespace testutil;

namespace {

// Minimal JSON-schema checker covering the subset the shipped schemas use:
// type, required, properties, items.
bool conforms(const Json& value, const Json& schema, std::string* why) {
  if (schema.contains("type")) {
    const std::string type = schema["type"];
    bool ok = (type == "object" && value.is_object()) || (type == "array" && value.is_array()) ||
              (type == "string" && value.is_string()) || (type == "boolean" && value.is_boolean()) ||
              (type == "integer" && value.is_number_integer()) || (type == "number" && value.is_number());
    if (!ok) {
      *why = "expected type " + type + ", got " + value.dump().substr(0, 40);
      return false;
    }
  }
  if (schema.contains("required"))
    for (const auto& key : schema["required"])
      if (!value.contains(key.get<std::string>())) {
        *why = "missing required key " + key.get<std::string>();
        return false;
      }
  if (schema.contains("properties"))
    for (const auto& [key, sub] : schema["properties"].items())
      if (value.contains(key) && !conforms(value[key], sub, why)) {
        *why = key + ": " + *why;
        return false;
      }
  if (schema.contains("items") && value.is_array())
    for (const auto& item : value)
      if (!conforms(item, schema["items"], why)) return false;
  return true;
}

void check_schema(const Json& value, const std::string& schema_name) {
  std::ifstream in(std::string(SCHEMA_DIR) + "/" + schema_name);
  REQUIRE(in.good());
  Json schema;
  in >> schema;
  std::string why;
  INFO(schema_name << ": " << why);
  CHECK(conforms(value, schema, &why));
}

}  // namespace

TEST_CASE("json emissions validate against the shipped schemas") {
  LinkDiagram d = right_trefoil();
  check_schema(diagram_to_json(d), "diagram.schema.json");

  StateComplex sc = apply_state(d, KauffmanState::all_A(3));
  check_schema(state_complex_to_json(sc, d), "state.schema.json");
  check_schema(graphs_to_json(sc), "graphs.schema.json");
  check_schema(jones_to_json(jones_in_A(d, d.reference_orientation())), "jones.schema.json");
  check_schema(classification_to_json(classify(d, KauffmanState::all_A(3))),
               "classify.schema.json");
  check_schema(search_to_json(exhaustive_search(d)), "search.schema.json");

  auto arcs = maximal_nonprime_arcs(sc);
  auto regions = decompose_regions(sc, arcs);
  check_schema(polyhedra_to_json(arcs, regions, verify_polyhedral_claims(d, sc.state)),
               "polyhedra.schema.json");
}

TEST_CASE("corpus loads and the batch row shape is stable") {
  std::vector<CorpusEntry> entries = load_corpus(std::string(CORPUS_DIR) + "/corpus.json");
  CHECK(entries.size() >= 20);
  for (const auto& e : entries) CHECK(e.valid());

  BatchRow row = run_entry(entries.front());
  CHECK(row.ok);
  Json j = batch_row_to_json(row);
  check_schema(j, "batch_row.schema.json");
  CHECK(batch_csv_header() ==
        "name,state,adequate,homogeneous,stable_coefficient,chi,orientable,geometric_type");
  CHECK(batch_row_to_csv(row).rfind(row.name + ",", 0) == 0);
}

TEST_CASE("corpus regression values all hold") {
  std::vector<CorpusEntry> entries = load_corpus(std::string(CORPUS_DIR) + "/corpus.json");
  for (const auto& e : entries) {
    BatchRow row = run_entry(e);
    INFO(e.name << ": " << row.error << row.expected_mismatch);
    CHECK(row.ok);
    if (row.expected_checked) CHECK(row.expected_ok);
  }
}

TEST_CASE("extreme coefficients hold on both adequate ends across the corpus") {
  std::vector<CorpusEntry> entries = load_corpus(std::string(CORPUS_DIR) + "/corpus.json");
  int checked = 0;
  for (const auto& e : entries) {
    LinkDiagram d = build_diagram(e);
    for (Resolution side : {Resolution::A, Resolution::B}) {
      KauffmanState s = side == Resolution::A ? KauffmanState::all_A(d.crossing_count())
                                              : KauffmanState::all_B(d.crossing_count());
      if (!is_adequate(apply_state(d, s))) continue;
      ExtremeCoefficientReport r = extreme_coefficient_check(d, side);
      INFO(e.name << " side " << resolution_char(side));
      CHECK(r.pass);
      ++checked;
    }
  }
  CHECK(checked >= 40);
}

TEST_CASE("state text and mask encodings") {
  KauffmanState s = KauffmanState::from_mask(4, 0b0101);
  CHECK(state_to_string(s) == "BABA");
  CHECK(s.mask() == 0b0101);
  CHECK(s.dual().mask() == 0b1010);
}

TEST_CASE("corpus file errors") {
  REQUIRE_THROWS_AS(load_corpus("/nonexistent/corpus.json"), Error);
}
