#include "persuasion/bench.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "persuasion/error.hpp"

namespace persuasion {

const char* to_string(SolverKind kind) noexcept {
  switch (kind) {
    case SolverKind::brute_force: return "bf";
    case SolverKind::branch_and_bound: return "bnb";
    case SolverKind::greedy: return "greedy";
  }
  return "unknown";
}

SolverKind solver_from_string(std::string_view name) {
  for (SolverKind k : {SolverKind::brute_force, SolverKind::branch_and_bound, SolverKind::greedy}) {
    if (name == to_string(k)) return k;
  }
  throw Error(Errc::bad_params, "unknown solver \"" + std::string(name) + "\" (expected bf, bnb or greedy)");
}

SolveResult run_solver(SolverKind kind, const PersuasionInstance& instance, std::size_t max_facts) {
  switch (kind) {
    case SolverKind::brute_force: return brute_force_solve(instance, {.max_facts = max_facts});
    case SolverKind::branch_and_bound: return branch_and_bound_solve(instance);
    case SolverKind::greedy: return greedy_solve(instance);
  }
  throw Error(Errc::bad_params, "unknown solver");
}

namespace {

PersuasionInstance make_instance(GenParams params, std::size_t size, std::uint64_t seed) {
  params.seed = seed;
  switch (params.family) {
    case Family::uniform:
      params.num_facts = size;
      return gen_uniform(params);
    case Family::planted:
      params.num_facts = size;
      params.planted_size = std::min(params.planted_size, size);
      return gen_planted(params).instance;
    case Family::gaussian_cherry:
      params.num_draws = size;
      return gen_gaussian_cherry(params);
    case Family::xc_random: break;
  }
  throw Error(Errc::bad_params, "bench needs a persuasion family");
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.base.family == Family::xc_random) throw Error(Errc::bad_params, "bench needs a persuasion family");
  if (!std::is_sorted(config.sizes.begin(), config.sizes.end())) {
    throw Error(Errc::bad_params, "bench sizes must be ascending");
  }
  const bool uses_bf = std::find(config.solvers.begin(), config.solvers.end(), SolverKind::brute_force) !=
                       config.solvers.end();
  if (uses_bf && !config.sizes.empty() && config.sizes.back() > config.max_facts) {
    throw Error(Errc::instance_too_large, "bench size " + std::to_string(config.sizes.back()) +
                                              " exceeds the brute-force cap of " + std::to_string(config.max_facts));
  }

  struct Job {
    std::size_t size;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (auto size : config.sizes) {
    for (std::size_t s = 0; s < config.seeds_per_size; ++s) jobs.push_back({size, config.base.seed + s});
  }

  std::vector<std::vector<BenchRow>> results(jobs.size());
  auto work = [&](std::size_t j) {
    const auto inst = make_instance(config.base, jobs[j].size, jobs[j].seed);
    for (auto kind : config.solvers) {
      const auto r = run_solver(kind, inst, config.max_facts);
      results[j].push_back(BenchRow{to_string(config.base.family), inst.num_facts(), inst.space.size(), jobs[j].seed,
                                    to_string(kind), r.decision, r.stats.nodes_explored,
                                    std::max<std::uint64_t>(1, r.stats.wall_nanos)});
    }
  };

  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    for (std::size_t j = 0; j < jobs.size(); ++j) work(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
            try {
              work(j);
            } catch (...) {
              std::lock_guard lock(failure_mu);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<BenchRow> rows;
  for (auto& batch : results) {
    for (auto& row : batch) rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::string out = std::string(kBenchCsvHeader) + "\n";
  for (const auto& r : rows) {
    out += r.family + "," + std::to_string(r.num_facts) + "," + std::to_string(r.num_outcomes) + "," +
           std::to_string(r.seed) + "," + r.solver + "," + to_string(r.decision) + "," + std::to_string(r.nodes) +
           "," + std::to_string(r.wall_nanos) + "\n";
  }
  return out;
}

}  // namespace persuasion
