#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "persuasion/instance.hpp"

namespace persuasion {

// Exact cover (S, A) mapped to a persuasion instance over
// outcomes S ∪ S̄ ∪ {z}, laid out as
//   [primal_offset, primal_offset + |S|)  copy of S
//   [dual_offset,   dual_offset + |S|)    duplicate S̄
//   z_index                               the focal outcome
// with uniform weights, focal {z}, threshold 1, and fact i equal to
// A_i ∪ (S̄ \ Ā_i) ∪ {z}.
struct ReductionMap {
  ExactCoverInstance source;
  PersuasionInstance target;
  std::size_t z_index = 0;
  std::size_t primal_offset = 0;
  std::size_t dual_offset = 0;
  std::vector<std::size_t> fact_to_block;
};

// Linear in n * |S|.
ReductionMap reduce_exact_cover(const ExactCoverInstance& xc);

struct DecodedCover {
  std::vector<std::size_t> blocks;
  bool pairwise_disjoint = true;
  bool covers_universe = false;
  // Common intersection of the chosen blocks is empty (S when none chosen).
  bool empty_meet = false;

  bool is_exact_cover() const noexcept { return pairwise_disjoint && covers_universe; }
};

// Fact i corresponds to block i. Throws IndexOutOfRange.
DecodedCover decode_witness(const ReductionMap& map, const Report& report);

// One instance on which exact cover and the reduced persuasion instance
// disagree.
struct AuditFinding {
  ExactCoverInstance instance;
  bool xc_exact = false;
  bool pers = false;
  bool meet = false;
  std::optional<Report> witness_report;
  std::optional<std::vector<std::size_t>> witness_cover;
};

struct AuditReport {
  std::size_t checked = 0;
  // Instances where the persuasion decision differs from the empty-meet
  // cover oracle; zero means the characterization held everywhere.
  std::size_t meet_mismatches = 0;
  // Sorted by serialized instance.
  std::vector<AuditFinding> findings;

  bool pers_equals_meet() const noexcept { return meet_mismatches == 0; }
};

inline constexpr std::size_t kAuditMaxUniverse = 8;
inline constexpr std::size_t kAuditMaxInstances = 2'000'000;

// Number of instances audit_reduction would enumerate.
std::size_t audit_instance_count(std::size_t max_universe, std::size_t max_blocks);

// Enumerates every universe size 0..max_universe and every multiset of at most
// max_blocks blocks over it, solving each three ways (exact cover, brute force
// on the reduction, empty-meet cover). Throws BoundsTooLarge when
// max_universe > kAuditMaxUniverse or the instance count exceeds
// kAuditMaxInstances.
AuditReport audit_reduction(std::size_t max_universe, std::size_t max_blocks);

// One JSON object per finding, then
// {"checked": K, "discrepancies": D, "pers_equals_meet": B}; newline-terminated.
std::string audit_record_stream(const AuditReport& report);

}  // namespace persuasion
