#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "persuasion/generators.hpp"
#include "persuasion/solvers.hpp"

namespace persuasion {

enum class SolverKind { brute_force, branch_and_bound, greedy };

const char* to_string(SolverKind kind) noexcept;  // "bf", "bnb", "greedy"
SolverKind solver_from_string(std::string_view name);

struct BenchRow {
  std::string family;
  std::size_t num_facts = 0;
  std::size_t num_outcomes = 0;
  std::uint64_t seed = 0;
  std::string solver;
  Decision decision = Decision::no;
  std::uint64_t nodes = 0;
  std::uint64_t wall_nanos = 0;
};

struct BenchConfig {
  // Any persuasion family; `sizes` sets num_facts (num_draws for
  // gaussian_cherry), everything else comes from `base`.
  GenParams base;
  std::vector<std::size_t> sizes;
  std::size_t seeds_per_size = 1;
  std::vector<SolverKind> solvers{SolverKind::brute_force, SolverKind::branch_and_bound};
  std::size_t max_facts = kDefaultFactCap;
  // Instances are solved concurrently; rows come back in canonical order.
  unsigned threads = 1;
};

SolveResult run_solver(SolverKind kind, const PersuasionInstance& instance, std::size_t max_facts = kDefaultFactCap);

// Rows ordered by (size, seed, solver as listed). Seeds are base.seed + s for
// s in [0, seeds_per_size). Throws BadParams for unsorted sizes or a
// non-persuasion family, InstanceTooLarge when a size exceeds max_facts
// under brute force.
std::vector<BenchRow> run_bench(const BenchConfig& config);

inline constexpr const char* kBenchCsvHeader = "family,num_facts,num_outcomes,seed,solver,decision,nodes,wall_nanos";

std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace persuasion
