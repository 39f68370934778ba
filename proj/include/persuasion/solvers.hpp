#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "persuasion/instance.hpp"

namespace persuasion {

enum class Decision { no, yes };

inline const char* to_string(Decision d) { return d == Decision::yes ? "YES" : "NO"; }

struct SolverStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t intersections_computed = 0;
  std::uint64_t wall_nanos = 0;
};

// witness is present iff decision == yes, and always passes verify_certificate.
struct SolveResult {
  Decision decision = Decision::no;
  std::optional<Report> witness;
  SolverStats stats;
};

inline constexpr std::size_t kDefaultFactCap = 24;

struct BruteForceOptions {
  std::size_t max_facts = kDefaultFactCap;
  // Worker count; the decision and the reported witness do not depend on it.
  unsigned threads = 1;
  // Stop at the first YES in enumeration order instead of visiting all 2^N
  // reports. The witness is the same either way.
  bool stop_at_first = false;
};

// Exhaustive search over all 2^N reports in reflected Gray-code order, keeping
// per-outcome exclusion counts so each step touches only the outcomes outside
// the toggled fact. The witness is the first YES in that order.
// Throws InstanceTooLarge when N > max_facts.
SolveResult brute_force_solve(const PersuasionInstance& instance, const BruteForceOptions& options = {});

// Depth-first search over distinct intersection sets. Children extend the
// current intersection by one fact; children with zero measure are pruned and
// already-seen intersections are skipped. nodes_explored counts visited
// distinct states, which is at most min(2^N, 2^|outcomes|).
SolveResult branch_and_bound_solve(const PersuasionInstance& instance);

// Incomplete heuristic: repeatedly add the fact giving the largest
// conditional (lowest index on ties) until the threshold is met or no fact
// strictly improves. A NO is not authoritative. intersections_computed counts
// candidate conditional evaluations.
SolveResult greedy_solve(const PersuasionInstance& instance);

// Reflected binary Gray code of t.
constexpr std::uint64_t gray_code(std::uint64_t t) noexcept { return t ^ (t >> 1); }

}  // namespace persuasion
