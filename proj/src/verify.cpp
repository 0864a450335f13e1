#include "weldpath/verify.hpp"

#include <sstream>

namespace weldpath {

nlohmann::json Verdict::to_json() const {
  nlohmann::json j;
  j["accepted"] = accepted;
  if (violation) {
    nlohmann::json v;
    v["pair"] = violation->pair ? nlohmann::json(*violation->pair) : nlohmann::json(nullptr);
    v["position"] =
        violation->position ? nlohmann::json(*violation->position) : nlohmann::json(nullptr);
    v["reason"] = violation->reason;
    j["violation"] = std::move(v);
  }
  return j;
}

namespace {

Verdict reject(std::optional<std::size_t> pair, std::optional<std::size_t> position,
               std::string reason) {
  return {false, Violation{pair, position, std::move(reason)}};
}

}  // namespace

Verdict verify_pdpc(const AssembledGraph& g, std::span<const Pair> pairs,
                    const PathCover& cover) {
  const std::size_t n = g.num_vertices();
  if (cover.size() != pairs.size()) {
    return reject(std::nullopt, std::nullopt,
                  "cover has " + std::to_string(cover.size()) + " paths for " +
                      std::to_string(pairs.size()) + " pairs");
  }
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const Path& p = cover[i];
    if (p.empty()) return reject(i, std::nullopt, "path is empty");
    for (std::size_t k = 0; k < p.size(); ++k) {
      const Vertex v = p[k];
      if (v >= n) return reject(i, k, "vertex " + std::to_string(v) + " out of range");
      if (seen[v]) return reject(i, k, "vertex " + std::to_string(v) + " visited twice");
      seen[v] = 1;
      if (k > 0 && !g.adjacent(p[k - 1], v)) {
        return reject(i, k,
                      "no edge between " + std::to_string(p[k - 1]) + " and " + std::to_string(v));
      }
    }
    if (p.front() != pairs[i].s) {
      return reject(i, 0,
                    "path starts at " + std::to_string(p.front()) + ", expected " +
                        std::to_string(pairs[i].s));
    }
    if (p.back() != pairs[i].t) {
      return reject(i, p.size() - 1,
                    "path ends at " + std::to_string(p.back()) + ", expected " +
                        std::to_string(pairs[i].t));
    }
  }
  std::vector<Vertex> missing;
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) missing.push_back(v);
  }
  if (!missing.empty()) {
    std::ostringstream os;
    os << "vertices {";
    for (std::size_t k = 0; k < missing.size() && k < 16; ++k) {
      os << (k ? "," : "") << missing[k];
    }
    if (missing.size() > 16) os << ",...";
    os << "} uncovered";
    return reject(std::nullopt, std::nullopt, os.str());
  }
  return {true, std::nullopt};
}

bool HypothesisReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

nlohmann::json HypothesisReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"path", c.path}, {"check", c.check}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"ok", ok()}, {"checks", std::move(arr)}};
}

std::string HypothesisReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    if (!c.passed) os << c.path << ": " << c.check << ": " << c.detail << "\n";
  }
  std::string s = os.str();
  return s.empty() ? "all checks passed" : s.substr(0, s.size() - 1);
}

namespace {

struct Checker {
  const OracleConfig& cfg;
  bool trust;
  HypothesisReport report;
  std::vector<std::pair<const LeafGraph*, bool>> certified;

  void add(const std::string& path, const char* check, bool passed, std::string detail) {
    report.checks.push_back({path, check, passed, std::move(detail)});
  }

  void leaf(const LeafGraph& lf, const std::string& path) {
    const std::size_t n = lf.num_vertices();
    const bool parity = n == 1 || (n > 0 && n % 2 == 0);
    add(path, "leaf-parity", parity,
        std::to_string(n) + (parity ? " vertices" : " vertices; must be a single vertex or even"));
    for (const auto& [seen, ok] : certified) {
      if (*seen == lf) {
        add(path, "leaf-certified", ok, ok ? "same as an earlier leaf" : "same as a failed leaf");
        return;
      }
    }
    bool ok = false;
    std::string detail;
    try {
      ok = certify_leaf(lf, cfg, trust);
      if (ok) {
        detail = n > cfg.bound ? "trusted (above oracle bound)" : "certified by exhaustive search";
      } else {
        detail = lf.mode == LaceMode::HamiltonianLaceable
                     ? "some black/white pair has no Hamiltonian path"
                     : "some vertex pair has no Hamiltonian path";
      }
    } catch (const Error& e) {
      detail = e.what();
    }
    certified.emplace_back(&lf, ok);
    add(path, "leaf-certified", ok, detail);
  }

  void node(const WeldTree& t, const std::string& path) {
    if (t.is_leaf()) {
      leaf(t.leaf(), path);
      return;
    }
    const WeldNode& nd = t.node();
    const std::size_t layers = nd.children.size();
    add(path, "layer-count", layers >= static_cast<std::size_t>(nd.rank) && layers >= 2,
        std::to_string(layers) + " layers at rank " + std::to_string(nd.rank));
    bool ranks = true;
    bool sizes = true;
    for (const auto& c : nd.children) {
      ranks = ranks && c.rank() == nd.rank - 1;
      sizes = sizes && c.num_vertices() == nd.children.front().num_vertices();
    }
    add(path, "child-rank", ranks, ranks ? "children have rank " + std::to_string(nd.rank - 1)
                                         : "children must have rank " + std::to_string(nd.rank - 1));
    add(path, "equal-sizes", sizes, sizes ? "layers have equal size" : "layer sizes differ");
    std::string problem;
    if (sizes && !nd.children.empty()) {
      std::vector<std::vector<Color>> colors;
      for (const auto& c : nd.children) colors.push_back(flatten_colors(c));
      const std::size_t m = colors.front().size();
      for (std::size_t i = 0; i < layers && problem.empty(); ++i) {
        for (std::size_t j = i + 1; j < layers && problem.empty(); ++j) {
          const std::string key = std::to_string(i) + "-" + std::to_string(j);
          if (!nd.matchings.contains(i, j)) {
            problem = "matching " + key + " missing";
            break;
          }
          for (Vertex x = 0; x < m; ++x) {
            if (colors[i][x] == colors[j][nd.matchings.partner(i, j, x)]) {
              problem = "matching " + key + " pairs equal colors at vertex " + std::to_string(x);
              break;
            }
          }
        }
      }
    } else {
      problem = "not checked (layer sizes differ)";
    }
    add(path, "matchings", problem.empty(), problem.empty() ? "complete and color-respecting" : problem);
    for (std::size_t i = 0; i < layers; ++i) {
      node(nd.children[i], path + ".children[" + std::to_string(i) + "]");
    }
  }
};

}  // namespace

HypothesisReport check_theorem_hypotheses(const WeldTree& tree, const OracleConfig& cfg,
                                          bool trust_leaves) {
  Checker ck{cfg, trust_leaves, {}, {}};
  ck.node(tree, "$");
  try {
    const AssembledGraph g = assemble(tree);
    ck.add("$", "bipartite", true, "assembly is properly two-colored");
    const Coloring c = g.coloring();
    if (!tree.is_leaf()) ck.add("$", "equitable", c.black_count == c.white_count,
           std::to_string(c.black_count) + " black, " + std::to_string(c.white_count) + " white");
  } catch (const Error& e) {
    ck.add("$", "bipartite", false, e.what());
  }
  return std::move(ck.report);
}

}  // namespace weldpath
