#include "weldpath/fuzz.hpp"

#include <algorithm>
#include <memory>
#include <random>

#include "weldpath/pdpc.hpp"

namespace weldpath {

nlohmann::json FuzzReport::to_json() const {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : failures) {
    nlohmann::json ps = nlohmann::json::array();
    for (const Pair& p : f.pairs) ps.push_back({p.s, p.t});
    fs.push_back({{"index", f.index}, {"graph", f.graph}, {"pairs", ps}, {"reason", f.reason}});
  }
  return {{"passed", passed},
          {"failed", failed},
          {"counting_violations", counting_violations},
          {"histogram", histogram},
          {"failures", fs}};
}

FuzzReport run_fuzz(const FuzzConfig& cfg) {
  const bool trans = cfg.family == "transposition";
  const bool kmm = cfg.family == "kmm-weld";
  if (!trans && !kmm && cfg.family != "mixed") {
    throw InputError("unknown fuzz family '" + cfg.family + "'");
  }
  if (cfg.min_rank < 2 || cfg.max_rank < cfg.min_rank || (trans && cfg.max_rank > 7) ||
      cfg.max_rank > 6) {
    throw InputError("fuzz ranks must satisfy 2 <= min <= max <= 6 (7 for transposition)");
  }
  std::map<std::string, std::unique_ptr<Solver>> cache;
  SolveOptions opts;
  opts.record_trace = false;
  FuzzReport report;
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    const int rank = std::uniform_int_distribution<int>(cfg.min_rank, cfg.max_rank)(rng);
    const bool use_trans = trans || (!kmm && (rng() & 1));
    std::string key;
    int m = 0, layers = 0;
    std::uint64_t gseed = 0;
    if (use_trans) {
      key = "transposition " + std::to_string(rank);
    } else {
      // Keep rank 5+ welds small enough to sweep quickly.
      m = rank >= 5 ? 1 : std::uniform_int_distribution<int>(1, 3)(rng);
      layers = rank + (rank >= 5 ? 0 : static_cast<int>(rng() & 1));
      gseed = rng() % 8;
      key = "kmm-weld rank=" + std::to_string(rank) + " m=" + std::to_string(m) +
            " layers=" + std::to_string(layers) + " seed=" + std::to_string(gseed);
    }
    auto& solver = cache[key];
    if (!solver) {
      const WeldTree tree = use_trans ? transposition_graph(rank) : kmm_weld(rank, m, layers, gseed);
      solver = std::make_unique<Solver>(tree, opts);
    }
    const AssembledGraph& g = solver->graph();
    std::vector<Vertex> black, white;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      (g.color(v) == Color::Black ? black : white).push_back(v);
    }
    std::shuffle(black.begin(), black.end(), rng);
    std::shuffle(white.begin(), white.end(), rng);
    PairSpec pairs;
    for (int k = 0; k + 1 < rank; ++k) pairs.push_back({black[k], white[k]});

    std::string reason;
    try {
      auto r = solver->solve(pairs);
      const Verdict v = verify_pdpc(g, pairs, r.cover);
      if (v.accepted) {
        ++report.histogram[r.trace.routine + ":" + r.trace.case_label];
      } else {
        reason = "verifier rejected: " + v.violation->reason;
      }
    } catch (const CountingViolation& e) {
      ++report.counting_violations;
      reason = std::string("counting violation: ") + e.what();
    } catch (const Error& e) {
      reason = e.what();
    }
    if (reason.empty()) {
      ++report.passed;
    } else {
      ++report.failed;
      report.failures.push_back({i, key, pairs, reason});
    }
  }
  return report;
}

}  // namespace weldpath
