#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "persuasion/instance.hpp"

namespace persuasion {

inline constexpr std::size_t kDefaultBlockCap = 24;

// Exact cover by backtracking: take the lowest uncovered element and branch on
// every block (ascending index) that contains it and fits in the uncovered
// part. Returns sorted block indices of the first cover found, or nullopt.
std::optional<std::vector<std::size_t>> xc_solve(const ExactCoverInstance& xc);

// Some subcollection I has union S and empty common intersection. The empty
// subcollection has union {} and intersection S. Exhaustive over 2^n.
// Throws InstanceTooLarge when n > max_blocks.
bool exists_cover_with_empty_meet(const ExactCoverInstance& xc, std::size_t max_blocks = kDefaultBlockCap);

// Same search, returning the first qualifying subcollection in ascending
// bitmask order.
std::optional<std::vector<std::size_t>> find_cover_with_empty_meet(const ExactCoverInstance& xc,
                                                                   std::size_t max_blocks = kDefaultBlockCap);

}  // namespace persuasion
