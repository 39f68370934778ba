// persuade: command-line front end for the persuasion toolkit.
//
// Exit codes: solve and verify return 0 for YES / passing, 1 for NO /
// failing, 2 for any error. Other subcommands return 0 or 2.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "persuasion/bench.hpp"
#include "persuasion/error.hpp"
#include "persuasion/exact_cover.hpp"
#include "persuasion/format.hpp"
#include "persuasion/generators.hpp"
#include "persuasion/pseudo_boolean.hpp"
#include "persuasion/reduction.hpp"
#include "persuasion/solvers.hpp"

namespace {

using namespace persuasion;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct GlobalOptions {
  std::uint64_t seed = 42;
  std::size_t cap_n = kDefaultFactCap;
  bool deterministic = true;
  unsigned threads = 1;

  unsigned effective_threads() const { return deterministic ? 1u : std::max(1u, threads); }
};

std::string join(const std::vector<std::size_t>& xs) {
  if (xs.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long long v = std::stoull(item, &used);
    if (used != item.size()) throw Error(Errc::bad_params, "bad index \"" + item + "\"");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

int cmd_solve(const GlobalOptions& g, const std::string& path, const std::string& solver_name,
              const std::string& opb_path) {
  const auto any = parse_instance(read_text_file(path));
  if (const auto* xc = std::get_if<ExactCoverInstance>(&any)) {
    const auto cover = xc_solve(*xc);
    std::cout << "decision: " << (cover ? "YES" : "NO") << "\n";
    std::cout << "cover: " << (cover ? join(*cover) : "-") << "\n";
    return cover ? kExitYes : kExitNo;
  }
  const auto& inst = std::get<PersuasionInstance>(any);
  if (!opb_path.empty()) write_text_file(opb_path, write_opb(encode_pseudo_boolean(inst)));

  const auto kind = solver_from_string(solver_name);
  SolveResult r = kind == SolverKind::brute_force
                      ? brute_force_solve(inst, {.max_facts = g.cap_n, .threads = g.effective_threads()})
                      : run_solver(kind, inst, g.cap_n);
  const bool yes = r.decision == Decision::yes;
  std::cout << "decision: " << to_string(r.decision);
  if (!yes && kind == SolverKind::greedy) std::cout << " inconclusive";
  std::cout << "\n";
  std::cout << "witness: " << (yes ? join(r.witness->indices()) : "-") << "\n";
  if (yes) {
    const auto value = conditional_prob(inst.space, inst.focal, report_intersection(inst, *r.witness));
    std::cout << "conditional: " << value->str() << "\n";
  } else {
    std::cout << "conditional: -\n";
  }
  std::cout << "nodes: " << r.stats.nodes_explored << "\n";
  std::cout << "intersections: " << r.stats.intersections_computed << "\n";
  std::cout << "wall_nanos: " << r.stats.wall_nanos << "\n";
  return yes ? kExitYes : kExitNo;
}

int cmd_verify(const std::string& path, const std::string& report_text) {
  const auto inst = parse_persuasion(read_text_file(path));
  const Report report(parse_index_list(report_text));
  const bool ok = verify_certificate(inst, report);
  const auto value = conditional_prob(inst.space, inst.focal, report_intersection(inst, report));
  std::cout << "valid: " << (ok ? "true" : "false") << "\n";
  std::cout << "conditional: " << (value ? value->str() : "undefined") << "\n";
  std::cout << "threshold: " << inst.threshold.str() << "\n";
  return ok ? kExitYes : kExitNo;
}

int cmd_reduce(const std::string& path, const std::string& out) {
  const auto xc = parse_exact_cover(read_text_file(path));
  emit(serialize_instance(reduce_exact_cover(xc).target), out);
  return 0;
}

int cmd_gen(const GenParams& params, const std::string& out) {
  switch (params.family) {
    case Family::uniform: emit(serialize_instance(gen_uniform(params)), out); break;
    case Family::planted: {
      const auto planted = gen_planted(params);
      emit(serialize_instance(planted.instance), out);
      std::cerr << "planted: " << join(planted.planted.indices()) << "\n";
      break;
    }
    case Family::gaussian_cherry: emit(serialize_instance(gen_gaussian_cherry(params)), out); break;
    case Family::xc_random: emit(serialize_instance(gen_xc_random(params)), out); break;
  }
  return 0;
}

int cmd_audit(std::size_t max_universe, std::size_t max_blocks, const std::string& out) {
  const auto report = audit_reduction(max_universe, max_blocks);
  const auto stream = audit_record_stream(report);
  if (out.empty() || out == "-") {
    std::cout << stream;
  } else {
    write_text_file(out, stream);
  }
  (out.empty() || out == "-" ? std::cerr : std::cout)
      << "checked " << report.checked << ", discrepancies " << report.findings.size() << ", pers_equals_meet "
      << (report.pers_equals_meet() ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Informational persuasion: solve, verify, reduce, generate, audit, bench"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Seed for gen and the first bench seed");
  app.add_option("--cap-n", g.cap_n, "Maximum fact count for brute force");
  app.add_flag("--deterministic,!--no-deterministic", g.deterministic,
               "Single canonical search order (default on); off allows --threads");
  app.add_option("--threads", g.threads, "Worker threads when not deterministic");

  auto* solve = app.add_subcommand("solve", "Decide an instance file");
  std::string solve_path, solver_name = "bnb", opb_path;
  solve->add_option("file", solve_path)->required();
  solve->add_option("--solver", solver_name, "bf, bnb or greedy")->capture_default_str();
  solve->add_option("--emit-opb", opb_path, "Write the pseudo-Boolean encoding (OPB) here");

  auto* verify = app.add_subcommand("verify", "Check a report against an instance");
  std::string verify_path, report_text;
  verify->add_option("file", verify_path)->required();
  verify->add_option("--report", report_text, "Comma-separated fact indices (empty for the empty report)");

  auto* reduce = app.add_subcommand("reduce-xc", "Reduce an exact-cover file to a persuasion instance");
  std::string reduce_path, reduce_out;
  reduce->add_option("file", reduce_path)->required();
  reduce->add_option("-o,--output", reduce_out);

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  GenParams params;
  std::string family = "uniform", density = "1/2", threshold = "1/2", block_density = "1/2", gen_out;
  gen->add_option("--family", family, "uniform, planted, gaussian_cherry or xc_random")->capture_default_str();
  gen->add_option("--outcomes", params.num_outcomes)->capture_default_str();
  gen->add_option("--facts", params.num_facts)->capture_default_str();
  gen->add_option("--density", density)->capture_default_str();
  gen->add_option("--threshold", threshold)->capture_default_str();
  gen->add_option("--planted-size", params.planted_size)->capture_default_str();
  gen->add_option("--draws", params.num_draws)->capture_default_str();
  gen->add_option("--grid-cells", params.grid_cells)->capture_default_str();
  gen->add_option("--effect-size", params.effect_size)->capture_default_str();
  gen->add_option("--universe", params.universe)->capture_default_str();
  gen->add_option("--blocks", params.num_blocks)->capture_default_str();
  gen->add_option("--block-density", block_density)->capture_default_str();
  gen->add_option("-o,--output", gen_out);

  auto* audit = app.add_subcommand("audit", "Exhaustively audit the exact-cover reduction");
  std::size_t max_universe = 3, max_blocks = 3;
  std::string audit_out;
  audit->add_option("--max-universe", max_universe)->capture_default_str();
  audit->add_option("--max-blocks", max_blocks)->capture_default_str();
  audit->add_option("-o,--output", audit_out, "JSON-lines record file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Benchmark solvers; CSV on stdout");
  std::string bench_family = "uniform", sizes_text = "8,9,10,11,12", solvers_text = "bf,bnb";
  std::string bench_density = "1/2", bench_threshold = "1/1";
  std::size_t seeds_per_size = 3;
  GenParams bench_params;
  bench_params.num_outcomes = 8;
  bench->add_option("--family", bench_family)->capture_default_str();
  bench->add_option("--sizes", sizes_text, "Comma-separated ascending fact counts")->capture_default_str();
  bench->add_option("--seeds-per-size", seeds_per_size)->capture_default_str();
  bench->add_option("--solvers", solvers_text)->capture_default_str();
  bench->add_option("--outcomes", bench_params.num_outcomes)->capture_default_str();
  bench->add_option("--density", bench_density)->capture_default_str();
  bench->add_option("--threshold", bench_threshold)->capture_default_str();
  bench->add_option("--planted-size", bench_params.planted_size)->capture_default_str();
  bench->add_option("--grid-cells", bench_params.grid_cells)->capture_default_str();
  bench->add_option("--effect-size", bench_params.effect_size)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (*solve) return cmd_solve(g, solve_path, solver_name, opb_path);
    if (*verify) return cmd_verify(verify_path, report_text);
    if (*reduce) return cmd_reduce(reduce_path, reduce_out);
    if (*gen) {
      params.family = family_from_string(family);
      params.fact_density = Rational::parse(density);
      params.threshold = Rational::parse(threshold);
      params.block_density = Rational::parse(block_density);
      params.seed = g.seed;
      return cmd_gen(params, gen_out);
    }
    if (*audit) return cmd_audit(max_universe, max_blocks, audit_out);
    if (*bench) {
      BenchConfig config;
      config.base = bench_params;
      config.base.family = family_from_string(bench_family);
      config.base.fact_density = Rational::parse(bench_density);
      config.base.threshold = Rational::parse(bench_threshold);
      config.base.seed = g.seed;
      config.sizes = parse_index_list(sizes_text);
      config.seeds_per_size = seeds_per_size;
      config.solvers.clear();
      std::stringstream ss(solvers_text);
      for (std::string s; std::getline(ss, s, ',');) config.solvers.push_back(solver_from_string(s));
      config.max_facts = g.cap_n;
      config.threads = g.effective_threads();
      std::cout << to_csv(run_bench(config));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
