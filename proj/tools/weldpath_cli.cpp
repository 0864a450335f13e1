#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "weldpath/fuzz.hpp"
#include "weldpath/io.hpp"
#include "weldpath/pdpc.hpp"

using namespace weldpath;

namespace {

enum Exit { kOk = 0, kReject = 1, kUsage = 2, kHypothesis = 3, kSolve = 4 };

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text << "\n";
  } else {
    write_text_file(out, text + "\n");
  }
}

WeldTree load_graph(const std::string& path, bool validate = true) {
  return parse_weld_spec(read_json_file(path), validate);
}

struct GenArgs {
  std::string family;
  int n = -1;
  int rank = 2, m = 1, layers = 2;
  std::uint64_t seed = 1;
  std::string spec, out, dot;
};

int run_gen(const GenArgs& a) {
  WeldTree tree = [&] {
    if (a.family == "transposition") {
      if (a.n < 1 || a.n > 7) throw InputError("transposition needs 1 <= N <= 7");
      return transposition_graph(a.n);
    }
    if (a.family == "kmm-weld") return kmm_weld(a.rank, a.m, a.layers, a.seed);
    if (a.family == "custom") {
      if (a.spec.empty()) throw InputError("custom needs --spec");
      return load_graph(a.spec);
    }
    throw InputError("unknown family '" + a.family + "'");
  }();
  const AssembledGraph g = assemble(tree);
  const std::string spec = serialize_weld_spec(tree).dump();
  if (!a.out.empty()) write_text_file(a.out, spec + "\n");
  if (!a.dot.empty()) write_text_file(a.dot, to_dot(g));
  std::ostream& os = a.out.empty() ? std::cerr : std::cout;
  if (a.out.empty()) std::cout << spec << "\n";
  os << "rank " << tree.rank() << " vertices " << g.num_vertices() << " edges "
     << g.edges().size() << " equitable " << (is_equitable(g) ? "yes" : "no") << "\n";
  return kOk;
}

struct SolveArgs {
  std::string graph, pairs, out, trace;
};

int run_solve(const SolveArgs& a) {
  const WeldTree tree = load_graph(a.graph, false);
  const PairSpec pairs = parse_pairs(read_json_file(a.pairs));
  SolveOptions opts;
  opts.oracle = oracle_config_from_env();
  try {
    const Solver solver(tree, opts);
    const Solver::Result r = solver.solve(pairs);
    emit(a.out, cover_to_json(r.cover).dump());
    if (!a.trace.empty()) write_text_file(a.trace, r.trace.to_json().dump(2) + "\n");
    return kOk;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n" << e.report().to_json().dump(2) << "\n";
    return kHypothesis;
  } catch (const SolveError& e) {
    std::cerr << "construction failure: " << e.what() << "\n";
    if (e.trace()) {
      const std::string t = e.trace()->to_json().dump(2);
      if (a.trace.empty()) {
        std::cerr << t << "\n";
      } else {
        write_text_file(a.trace, t + "\n");
      }
    }
    return kSolve;
  }
}

int run_verify(const std::string& graph, const std::string& pairs_file, const std::string& cover_file) {
  const AssembledGraph g = assemble(load_graph(graph));
  const PairSpec pairs = parse_pairs(read_json_file(pairs_file));
  const PathCover cover = parse_cover(read_json_file(cover_file));
  const Verdict v = verify_pdpc(g, pairs, cover);
  std::cout << v.to_json().dump() << "\n";
  return v.accepted ? kOk : kReject;
}

int run_oracle(const std::string& graph, const std::string& pairs_file, const std::string& out) {
  const AssembledGraph g = assemble(load_graph(graph));
  const PairSpec pairs = parse_pairs(read_json_file(pairs_file));
  const auto cover = brute_pdpc(g, pairs, oracle_config_from_env());
  if (!cover) {
    std::cout << "NONE\n";
    return kOk;
  }
  emit(out, cover_to_json(*cover).dump());
  return kOk;
}

int run_fuzz_cmd(const FuzzConfig& cfg, bool json) {
  const FuzzReport r = run_fuzz(cfg);
  if (json) {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    std::cout << "passed " << r.passed << " failed " << r.failed << " counting-violations "
              << r.counting_violations << "\n";
    for (const auto& [label, count] : r.histogram) std::cout << label << " " << count << "\n";
    for (const auto& f : r.failures) {
      std::cout << "FAIL #" << f.index << " [" << f.graph << "] " << f.reason << "\n";
    }
  }
  return r.failed == 0 ? kOk : kReject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paired disjoint path covers of transposition-like graphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a weld spec");
  g->add_option("family", gen.family, "transposition | kmm-weld | custom")->required();
  g->add_option("N", gen.n, "n for transposition");
  g->add_option("--rank", gen.rank, "kmm-weld rank");
  g->add_option("--m", gen.m, "kmm-weld leaf K_{m,m}");
  g->add_option("--layers", gen.layers, "kmm-weld layers per node");
  g->add_option("--seed", gen.seed, "kmm-weld matching seed");
  g->add_option("--spec", gen.spec, "custom: weld-spec JSON to validate and re-emit");
  g->add_option("--out", gen.out, "output spec file (stdout if absent)");
  g->add_option("--dot", gen.dot, "also write the assembled graph as DOT");

  SolveArgs sa;
  auto* s = app.add_subcommand("solve", "Construct a paired disjoint path cover");
  s->add_option("--graph", sa.graph)->required();
  s->add_option("--pairs", sa.pairs)->required();
  s->add_option("--out", sa.out, "cover file (stdout if absent)");
  s->add_option("--trace", sa.trace, "write the solve trace JSON here");

  std::string vg, vp, vc;
  auto* v = app.add_subcommand("verify", "Check a cover");
  v->add_option("--graph", vg)->required();
  v->add_option("--pairs", vp)->required();
  v->add_option("--cover", vc)->required();

  std::string og, op, oo;
  auto* o = app.add_subcommand("oracle", "Exhaustive search for a cover");
  o->add_option("--graph", og)->required();
  o->add_option("--pairs", op)->required();
  o->add_option("--out", oo, "cover file (stdout if absent)");

  FuzzConfig fc;
  bool fjson = false;
  auto* f = app.add_subcommand("fuzz", "Random solve + verify sweep");
  f->add_option("--family", fc.family, "transposition | kmm-weld | mixed");
  f->add_option("--instances", fc.instances);
  f->add_option("--seed", fc.seed);
  f->add_option("--max-rank", fc.max_rank);
  f->add_option("--min-rank", fc.min_rank);
  f->add_flag("--json", fjson, "print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*g) return run_gen(gen);
    if (*s) return run_solve(sa);
    if (*v) return run_verify(vg, vp, vc);
    if (*o) return run_oracle(og, op, oo);
    return run_fuzz_cmd(fc, fjson);
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kHypothesis;
  } catch (const SolveError& e) {
    std::cerr << "construction failure: " << e.what() << "\n";
    return kSolve;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
