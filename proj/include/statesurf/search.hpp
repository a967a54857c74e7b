#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "statesurf/kauffman.hpp"
#include "statesurf/link_diagram.hpp"
#include "statesurf/parallel.hpp"

namespace statesurf {

struct StateVerdict {
  uint64_t mask = 0;
  std::string role;  // "all-A", "all-B", "seifert" or empty for enumerated states
  int circle_count = 0;
  bool adequate = false;
  bool homogeneous = false;

  bool passing() const { return adequate && homogeneous; }
};

struct SearchBudget {
  uint64_t max_states = std::numeric_limits<uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
};

struct SearchResult {
  std::string diagram_id;  // set by callers that tabulate several diagrams
  uint64_t total_examined = 0;
  uint64_t adequate_count = 0;
  uint64_t homogeneous_count = 0;
  uint64_t homogeneously_adequate_count = 0;
  bool truncated = false;
  std::vector<StateVerdict> found;  // passing states (probe: all probed states)
};

// Evaluates the all-A, all-B, and Seifert states (for every orientation of
// the components); duplicate masks are reported once with merged roles.
inline SearchResult probe_special_states(const LinkDiagram& d) {
  SearchResult result;
  const int c = d.crossing_count();
  if (d.is_round_unknot()) {
    StateVerdict v{0, "all-A all-B seifert", 1, true, true};
    result.found.push_back(v);
    result.total_examined = 1;
    result.adequate_count = result.homogeneous_count = result.homogeneously_adequate_count = 1;
    return result;
  }

  FastStateEvaluator eval(d);
  auto add = [&](const KauffmanState& s, const std::string& role) {
    uint64_t mask = s.mask();
    for (auto& existing : result.found) {
      if (existing.mask == mask) {
        existing.role += " " + role;
        return;
      }
    }
    auto verdict = eval.evaluate(s);
    StateVerdict v{mask, role, verdict.circle_count, verdict.adequate, verdict.homogeneous};
    result.found.push_back(v);
    ++result.total_examined;
    if (v.adequate) ++result.adequate_count;
    if (v.homogeneous) ++result.homogeneous_count;
    if (v.passing()) ++result.homogeneously_adequate_count;
  };

  add(KauffmanState::all_A(c), "all-A");
  add(KauffmanState::all_B(c), "all-B");
  const int comps = d.component_count();
  for (uint64_t bits = 0; bits < (uint64_t(1) << comps); ++bits) {
    Orientation o = d.reference_orientation();
    for (int k = 0; k < comps; ++k) o.flip[k] = (bits >> k) & 1;
    add(seifert_state(d, o), "seifert[" + std::to_string(bits) + "]");
  }
  return result;
}

// Iterates all 2^c states in fixed-prefix blocks; passing states are those
// that are simultaneously adequate and homogeneous.  With an unlimited
// budget the output is independent of the worker count.
inline SearchResult exhaustive_search(const LinkDiagram& d, const SearchBudget& budget = {},
                                      int threads = 1, int crossing_cap = kDefaultCrossingCap,
                                      const std::function<void(const StateVerdict&)>& sink = {}) {
  SearchResult result;
  if (d.is_round_unknot()) {
    StateVerdict v{0, "", 1, true, true};
    result.total_examined = 1;
    result.adequate_count = result.homogeneous_count = result.homogeneously_adequate_count = 1;
    result.found.push_back(v);
    if (sink) sink(v);
    return result;
  }
  const int c = d.crossing_count();
  require(c <= crossing_cap, ErrorCode::TooManyCrossings,
          "exhaustive search capped at " + std::to_string(crossing_cap) + " crossings");

  const int block_bits = c > 12 ? c - 12 : 0;
  const int blocks = 1 << block_bits;
  const uint64_t per_block = uint64_t(1) << (c - block_bits);

  struct BlockResult {
    uint64_t examined = 0, adequate = 0, homogeneous = 0, passing = 0;
    bool truncated = false;
    std::vector<StateVerdict> found;
  };

  std::atomic<uint64_t> examined_global{0};
  const auto start = std::chrono::steady_clock::now();
  auto out_of_budget = [&](uint64_t examined_before) {
    if (examined_before >= budget.max_states) return true;
    if (budget.max_seconds != std::numeric_limits<double>::infinity()) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      if (elapsed.count() >= budget.max_seconds) return true;
    }
    return false;
  };

  auto run_block = [&](int block) {
    BlockResult r;
    FastStateEvaluator eval(d);
    for (uint64_t lo = 0; lo < per_block; ++lo) {
      if (out_of_budget(examined_global.fetch_add(1))) {
        r.truncated = true;
        break;
      }
      uint64_t mask = (uint64_t(block) << (c - block_bits)) | lo;
      KauffmanState s = KauffmanState::from_mask(c, mask);
      auto verdict = eval.evaluate(s);
      ++r.examined;
      if (verdict.adequate) ++r.adequate;
      if (verdict.homogeneous) ++r.homogeneous;
      if (verdict.adequate && verdict.homogeneous) {
        ++r.passing;
        r.found.push_back({mask, "", verdict.circle_count, true, true});
      }
    }
    return r;
  };

  auto partials = run_blocks<BlockResult>(blocks, threads, run_block);
  for (const auto& p : partials) {
    result.total_examined += p.examined;
    result.adequate_count += p.adequate;
    result.homogeneous_count += p.homogeneous;
    result.homogeneously_adequate_count += p.passing;
    result.truncated = result.truncated || p.truncated;
    for (const auto& v : p.found) {
      result.found.push_back(v);
      if (sink) sink(v);
    }
  }
  return result;
}

}  // namespace statesurf
