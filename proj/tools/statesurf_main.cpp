#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "statesurf/corpus.hpp"
#include "statesurf/json_io.hpp"
#include "statesurf/parallel.hpp"

namespace {

using namespace statesurf;

struct CommonOpts {
  std::string pd;
  std::string braid;
  std::string format = "json";
  int threads = default_thread_count();
  int cap = kDefaultCrossingCap;
};

void add_input_options(CLI::App* cmd, CommonOpts& opts) {
  auto* pd = cmd->add_option("--pd", opts.pd, "PD code, e.g. X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]");
  auto* braid = cmd->add_option("--braid", opts.braid,
                                "braid input: strand count then signed letters, e.g. \"2: 1 1 1\"");
  pd->excludes(braid);
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--threads", opts.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--cap", opts.cap, "crossing cap for state sums")->check(CLI::PositiveNumber);
}

LinkDiagram diagram_from(const CommonOpts& opts) {
  require(opts.pd.empty() != opts.braid.empty(), ErrorCode::MalformedCode,
          "provide exactly one of --pd / --braid");
  return opts.pd.empty() ? braid_closure(parse_braid(opts.braid)) : parse_pd(opts.pd);
}

void emit(const Json& j, const std::string& format, const std::string& text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int run(int argc, char** argv) {
  CLI::App app{"state surfaces of link diagrams: Kauffman states, adequacy and homogeneity, "
               "surface invariants, Jones polynomials, and the fiber/quasifuchsian classification"};
  app.require_subcommand(1);

  CommonOpts parse_opts, state_opts, search_opts, jones_opts, classify_opts, poly_opts;
  std::string state_name = "all-a", classify_state = "all-a", poly_state = "all-a",
              search_state;
  bool search_probe = false;
  uint64_t max_states = 0;
  double max_seconds = 0.0;

  auto* cmd_parse = app.add_subcommand("parse", "parse and validate a diagram");
  add_input_options(cmd_parse, parse_opts);

  auto* cmd_state = app.add_subcommand("state", "apply a Kauffman state");
  add_input_options(cmd_state, state_opts);
  cmd_state->add_option("--state", state_name, "all-a | all-b | seifert | mask:<int>");

  auto* cmd_search = app.add_subcommand("search", "enumerate adequate homogeneous states");
  add_input_options(cmd_search, search_opts);
  cmd_search->add_flag("--probe", search_probe, "probe only the all-A, all-B and Seifert states");
  cmd_search->add_option("--max-states", max_states, "stop after examining this many states");
  cmd_search->add_option("--max-seconds", max_seconds, "wall-clock budget in seconds");

  auto* cmd_jones = app.add_subcommand("jones", "Kauffman bracket and Jones polynomial");
  add_input_options(cmd_jones, jones_opts);

  auto* cmd_classify = app.add_subcommand("classify", "full state-surface classification");
  add_input_options(cmd_classify, classify_opts);
  cmd_classify->add_option("--state", classify_state, "all-a | all-b | seifert | mask:<int>");

  auto* cmd_poly = app.add_subcommand("polyhedra", "non-prime arcs, regions and lower polyhedra");
  add_input_options(cmd_poly, poly_opts);
  cmd_poly->add_option("--state", poly_state, "all-a | all-b | seifert | mask:<int>");

  std::string corpus_path;
  CommonOpts batch_opts;
  batch_opts.format = "csv";
  auto* cmd_batch = app.add_subcommand("batch", "tabulate a corpus file");
  cmd_batch->add_option("corpus", corpus_path, "JSON corpus file")->required();
  cmd_batch->add_option("--format", batch_opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd_batch->add_option("--threads", batch_opts.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd_batch->add_option("--cap", batch_opts.cap, "crossing cap for state sums");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors exit 1
  }

  if (cmd_parse->parsed()) {
    LinkDiagram d = diagram_from(parse_opts);
    Json j = diagram_to_json(d);
    emit(j, parse_opts.format,
         "crossings: " + std::to_string(d.crossing_count()) +
             "\ncomponents: " + std::to_string(d.component_count()) + "\npd: " + emit_pd(d) + "\n");
  } else if (cmd_state->parsed()) {
    LinkDiagram d = diagram_from(state_opts);
    StateComplex sc = apply_state(d, resolve_state(d, state_name));
    Json j = state_complex_to_json(sc, d);
    emit(j, state_opts.format,
         "state: " + state_to_string(sc.state) + "\ncircles: " + std::to_string(sc.circle_count()) +
             "\nadequate: " + (is_adequate(sc) ? "true" : "false") +
             "\nhomogeneous: " + (is_homogeneous(sc) ? "true" : "false") + "\n");
  } else if (cmd_search->parsed()) {
    LinkDiagram d = diagram_from(search_opts);
    SearchBudget budget;
    if (max_states > 0) budget.max_states = max_states;
    if (max_seconds > 0) budget.max_seconds = max_seconds;
    SearchResult r = search_probe
                         ? probe_special_states(d)
                         : exhaustive_search(d, budget, search_opts.threads, search_opts.cap);
    r.diagram_id = search_opts.pd.empty() ? "braid " + search_opts.braid : emit_pd(d);
    std::string text = "examined: " + std::to_string(r.total_examined) +
                       "\nadequate: " + std::to_string(r.adequate_count) +
                       "\nhomogeneous: " + std::to_string(r.homogeneous_count) +
                       "\nhomogeneously adequate: " + std::to_string(r.homogeneously_adequate_count) +
                       "\n";
    emit(search_to_json(r), search_opts.format, text);
  } else if (cmd_jones->parsed()) {
    LinkDiagram d = diagram_from(jones_opts);
    LaurentPolynomial p = jones_in_A(d, d.reference_orientation(), jones_opts.threads, jones_opts.cap);
    emit(jones_to_json(p), jones_opts.format, jones_text(p) + "\n");
  } else if (cmd_classify->parsed()) {
    LinkDiagram d = diagram_from(classify_opts);
    KauffmanState sigma = resolve_state(d, classify_state);
    ClassificationReport r = classify(d, sigma);
    Json j;
    j["diagram"] = diagram_to_json(d);
    j["state"] = state_to_string(sigma);
    StateComplex sc = apply_state(d, sigma);
    j["graphs"] = graphs_to_json(sc);
    j["classification"] = classification_to_json(r);
    std::string text = std::string("adequate: ") + (r.hypotheses.adequate ? "true" : "false") +
                       "\nhomogeneous: " + (r.hypotheses.homogeneous ? "true" : "false") +
                       "\nprime: " + (r.hypotheses.prime ? "true" : "false") +
                       "\nfiber: " + (r.fiber ? "true" : "false") +
                       "\ngeometric type: " + geometric_type_name(r.geometric_type) + "\n";
    emit(j, classify_opts.format, text);
  } else if (cmd_poly->parsed()) {
    LinkDiagram d = diagram_from(poly_opts);
    KauffmanState sigma = resolve_state(d, poly_state);
    StateComplex sc = apply_state(d, sigma);
    std::vector<NonPrimeArc> arcs = maximal_nonprime_arcs(sc);
    std::vector<PolyhedralRegion> regions = decompose_regions(sc, arcs);
    PolyhedralClaimsReport claims = verify_polyhedral_claims(d, sigma);
    Json j = polyhedra_to_json(arcs, regions, claims);
    std::string text = "non-prime arcs: " + std::to_string(arcs.size()) +
                       "\nregions: " + std::to_string(regions.size()) +
                       "\nclaims pass: " + (claims.all_pass() ? "true" : "false") + "\n";
    emit(j, poly_opts.format, text);
  } else if (cmd_batch->parsed()) {
    std::vector<CorpusEntry> entries = load_corpus(corpus_path);
    auto rows = run_blocks<BatchRow>(static_cast<int>(entries.size()), batch_opts.threads,
                                     [&](int i) { return run_entry(entries[i], 1, batch_opts.cap); });
    bool any_error = false;
    if (batch_opts.format == "json") {
      Json j = Json::array();
      for (const auto& r : rows) j.push_back(batch_row_to_json(r));
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << batch_csv_header() << "\n";
      for (const auto& r : rows) std::cout << batch_row_to_csv(r) << "\n";
    }
    for (const auto& r : rows)
      if (!r.ok || (r.expected_checked && !r.expected_ok)) any_error = true;
    if (any_error) return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const statesurf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_status();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
