#include "persuasion/exact_cover.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "persuasion/error.hpp"

namespace persuasion {

namespace {

bool cover_from(const ExactCoverInstance& xc, const EventSet& uncovered, std::vector<std::size_t>& chosen) {
  if (uncovered.empty()) return true;
  const std::size_t element = uncovered.indices().front();
  for (std::size_t b = 0; b < xc.blocks.size(); ++b) {
    const auto& block = xc.blocks[b];
    if (!block.contains(element) || !block.is_subset_of(uncovered)) continue;
    chosen.push_back(b);
    if (cover_from(xc, uncovered - block, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> xc_solve(const ExactCoverInstance& xc) {
  validate(xc);
  std::vector<std::size_t> chosen;
  if (!cover_from(xc, EventSet::full(xc.universe_size), chosen)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::optional<std::vector<std::size_t>> find_cover_with_empty_meet(const ExactCoverInstance& xc,
                                                                   std::size_t max_blocks) {
  validate(xc);
  const std::size_t n = xc.blocks.size();
  if (n > std::min<std::size_t>(max_blocks, 62)) {
    throw Error(Errc::instance_too_large, "subcollection enumeration is capped at " + std::to_string(max_blocks) +
                                              " blocks, instance has " + std::to_string(n));
  }
  const EventSet everything = EventSet::full(xc.universe_size);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    EventSet unite(xc.universe_size);
    EventSet meet = everything;
    std::vector<std::size_t> picked;
    for (std::size_t b = 0; b < n; ++b) {
      if ((mask >> b) & 1u) {
        unite |= xc.blocks[b];
        meet &= xc.blocks[b];
        picked.push_back(b);
      }
    }
    if (unite == everything && meet.empty()) return picked;
  }
  return std::nullopt;
}

bool exists_cover_with_empty_meet(const ExactCoverInstance& xc, std::size_t max_blocks) {
  return find_cover_with_empty_meet(xc, max_blocks).has_value();
}

}  // namespace persuasion
