#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "statesurf/json_io.hpp"

namespace statesurf {

struct CorpusEntry {
  std::string name;
  std::string pd;     // exactly one of pd / braid is set
  std::string braid;
  std::string state = "all-a";  // designated state for tabulation
  bool alternating = false;
  bool torus_2q = false;  // standard (2,q) torus-link diagram
  Json expected;          // frozen regression values, optional

  bool valid() const { return pd.empty() != braid.empty(); }
};

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::MalformedCode, "cannot open corpus file " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::MalformedCode, std::string("corpus is not valid JSON: ") + e.what());
  }
  require(j.is_array(), ErrorCode::MalformedCode, "corpus must be a JSON array");
  std::vector<CorpusEntry> out;
  for (const auto& item : j) {
    CorpusEntry e;
    e.name = item.value("name", "");
    e.pd = item.value("pd", "");
    e.braid = item.value("braid", "");
    e.state = item.value("state", "all-a");
    e.alternating = item.value("alternating", false);
    e.torus_2q = item.value("torus_2q", false);
    if (item.contains("expected")) e.expected = item["expected"];
    require(!e.name.empty(), ErrorCode::MalformedCode, "corpus entry without a name");
    require(e.valid(), ErrorCode::MalformedCode,
            "corpus entry '" + e.name + "' needs exactly one of pd/braid");
    out.push_back(std::move(e));
  }
  return out;
}

inline LinkDiagram build_diagram(const CorpusEntry& e) {
  return e.pd.empty() ? braid_closure(parse_braid(e.braid)) : parse_pd(e.pd);
}

// State selectors accepted by the CLI: all-a, all-b, seifert, mask:<int>.
inline KauffmanState resolve_state(const LinkDiagram& d, const std::string& name) {
  const int c = d.crossing_count();
  if (name == "all-a" || name == "all-A") return KauffmanState::all_A(c);
  if (name == "all-b" || name == "all-B") return KauffmanState::all_B(c);
  if (name == "seifert") return seifert_state(d, d.reference_orientation());
  if (name.rfind("mask:", 0) == 0) {
    uint64_t mask = 0;
    try {
      mask = std::stoull(name.substr(5));
    } catch (...) {
      fail(ErrorCode::MalformedCode, "bad state mask '" + name + "'");
    }
    require(c >= 64 || mask < (uint64_t(1) << c), ErrorCode::MalformedCode,
            "state mask out of range for " + std::to_string(c) + " crossings");
    return KauffmanState::from_mask(c, mask);
  }
  fail(ErrorCode::MalformedCode, "unknown state selector '" + name + "'");
}

struct BatchRow {
  std::string name;
  std::string state;
  bool ok = false;
  std::string error;

  bool adequate = false;
  bool homogeneous = false;
  int stable_coefficient = -1;
  int chi = 0;
  bool orientable = false;
  std::string geometric_type;
  std::string jones;

  bool expected_checked = false;
  bool expected_ok = false;
  std::string expected_mismatch;
};

inline BatchRow run_entry(const CorpusEntry& e, int threads = 1,
                          int crossing_cap = kDefaultCrossingCap) {
  BatchRow row;
  row.name = e.name;
  row.state = e.state;
  try {
    LinkDiagram d = build_diagram(e);
    KauffmanState sigma = resolve_state(d, e.state);
    ClassificationReport report = classify(d, sigma);
    row.adequate = report.hypotheses.adequate;
    row.homogeneous = report.hypotheses.homogeneous;
    row.stable_coefficient = report.stable_coefficient;
    row.chi = report.surface.chi;
    row.orientable = report.surface.orientable;
    row.geometric_type = geometric_type_name(report.geometric_type);
    if (d.crossing_count() <= crossing_cap)
      row.jones = jones_text(jones_in_A(d, d.reference_orientation(), threads, crossing_cap));
    row.ok = true;

    if (!e.expected.is_null()) {
      row.expected_checked = true;
      row.expected_ok = true;
      auto check = [&](const char* key, const Json& actual) {
        if (!e.expected.contains(key)) return;
        if (e.expected[key] != actual) {
          row.expected_ok = false;
          row.expected_mismatch += std::string(row.expected_mismatch.empty() ? "" : "; ") + key +
                                   ": expected " + e.expected[key].dump() + ", got " + actual.dump();
        }
      };
      check("adequate", row.adequate);
      check("homogeneous", row.homogeneous);
      check("stable_coefficient", row.stable_coefficient);
      check("chi", row.chi);
      check("orientable", row.orientable);
      check("geometric_type", row.geometric_type);
      check("jones", row.jones);
      check("components", d.component_count());
      check("crossings", d.crossing_count());
      check("prime", report.hypotheses.prime);
      check("fiber", report.fiber);
      check("torus_link_flag", report.torus_link_flag);
    }
  } catch (const Error& err) {
    row.error = err.what();
  } catch (const std::exception& err) {
    row.error = err.what();
  }
  return row;
}

inline Json batch_row_to_json(const BatchRow& r) {
  Json j;
  j["name"] = r.name;
  j["state"] = r.state;
  if (!r.ok) {
    j["error"] = r.error;
    return j;
  }
  j["adequate"] = r.adequate;
  j["homogeneous"] = r.homogeneous;
  j["stable_coefficient"] = r.stable_coefficient;
  j["chi"] = r.chi;
  j["orientable"] = r.orientable;
  j["geometric_type"] = r.geometric_type;
  j["jones"] = r.jones;
  if (r.expected_checked) {
    j["expected_ok"] = r.expected_ok;
    if (!r.expected_ok) j["expected_mismatch"] = r.expected_mismatch;
  }
  return j;
}

inline std::string batch_csv_header() {
  return "name,state,adequate,homogeneous,stable_coefficient,chi,orientable,geometric_type";
}

inline std::string batch_row_to_csv(const BatchRow& r) {
  if (!r.ok) return r.name + "," + r.state + ",error,,,,,";
  auto b = [](bool v) { return v ? "true" : "false"; };
  return r.name + "," + r.state + "," + b(r.adequate) + "," + b(r.homogeneous) + "," +
         std::to_string(r.stable_coefficient) + "," + std::to_string(r.chi) + "," +
         b(r.orientable) + "," + r.geometric_type;
}

}  // namespace statesurf
