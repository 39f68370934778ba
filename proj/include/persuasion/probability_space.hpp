#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "persuasion/event_set.hpp"
#include "persuasion/rational.hpp"

namespace persuasion {

// Finite probability space over the power set of its outcomes. Weights are
// exact rationals summing to one. Immutable once built.
//
// Internally every weight is also kept as an integer numerator over the
// least common denominator L of all weights, so the measure of any event is
// an integer sum divided by L.
class ProbabilitySpace {
 public:
  // Errors: LengthMismatch, NegativeWeight, WeightsNotSummingToOne, DuplicateLabel.
  static ProbabilitySpace make(std::vector<std::string> labels, std::vector<Rational> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }

  const BigInt& common_denominator() const noexcept { return denominator_; }
  const std::vector<BigInt>& scaled_weights() const noexcept { return scaled_; }
  // Present iff L < 2^63; then every partial sum of scaled weights fits too.
  std::optional<std::span<const std::uint64_t>> small_scaled_weights() const noexcept {
    if (small_.empty()) return std::nullopt;
    return std::span<const std::uint64_t>(small_);
  }

  EventSet full_event() const { return EventSet::full(size()); }
  EventSet empty_event() const { return EventSet(size()); }

  // Sum of scaled weights over the event's members. Throws UniverseMismatch.
  BigInt measure_numerator(const EventSet& event) const;

 private:
  ProbabilitySpace() = default;

  std::vector<std::string> labels_;
  std::vector<Rational> weights_;
  BigInt denominator_;
  std::vector<BigInt> scaled_;
  std::vector<std::uint64_t> small_;
};

inline ProbabilitySpace make_space(std::vector<std::string> labels, std::vector<Rational> weights) {
  return ProbabilitySpace::make(std::move(labels), std::move(weights));
}

Rational event_prob(const ProbabilitySpace& space, const EventSet& event);

// Intersection of all facts; the empty list yields the full universe.
EventSet intersect_all(std::span<const EventSet> facts, std::size_t universe_size);

// P(event | given), or nullopt when P(given) = 0.
std::optional<Rational> conditional_prob(const ProbabilitySpace& space, const EventSet& event,
                                         const EventSet& given);

}  // namespace persuasion
