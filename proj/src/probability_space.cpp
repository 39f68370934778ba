#include "persuasion/probability_space.hpp"

#include <limits>
#include <unordered_set>

#include "persuasion/error.hpp"

namespace persuasion {

namespace {

void check_universe(const ProbabilitySpace& space, const EventSet& event) {
  if (event.universe_size() != space.size()) {
    throw Error(Errc::universe_mismatch, "event over " + std::to_string(event.universe_size()) +
                                             " outcomes used with space of " +
                                             std::to_string(space.size()));
  }
}

}  // namespace

ProbabilitySpace ProbabilitySpace::make(std::vector<std::string> labels, std::vector<Rational> weights) {
  if (labels.empty() || labels.size() != weights.size()) {
    throw Error(Errc::length_mismatch, "space needs equal, nonzero numbers of labels (" +
                                           std::to_string(labels.size()) + ") and weights (" +
                                           std::to_string(weights.size()) + ")");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(Errc::duplicate_label, "duplicate outcome label \"" + label + "\"");
    }
  }
  Rational total;
  BigInt lcm_den = 1;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].sign() < 0) {
      throw Error(Errc::negative_weight, "weight " + std::to_string(i) + " is negative: " + weights[i].str());
    }
    total += weights[i];
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), weights[i].den().get_mpz_t());
  }
  if (total != Rational(1)) {
    throw Error(Errc::weights_not_summing_to_one, "weights sum to " + total.str() + ", expected 1/1");
  }

  ProbabilitySpace space;
  space.labels_ = std::move(labels);
  space.weights_ = std::move(weights);
  space.denominator_ = lcm_den;
  space.scaled_.reserve(space.weights_.size());
  for (const auto& w : space.weights_) {
    space.scaled_.push_back(BigInt(w.num() * (lcm_den / w.den())));
  }
  if (lcm_den <= BigInt(std::numeric_limits<std::int64_t>::max())) {
    space.small_.reserve(space.scaled_.size());
    for (const auto& a : space.scaled_) space.small_.push_back(a.get_ui());
  }
  return space;
}

BigInt ProbabilitySpace::measure_numerator(const EventSet& event) const {
  check_universe(*this, event);
  if (!small_.empty()) {
    std::uint64_t sum = 0;
    event.for_each([&](std::size_t i) { sum += small_[i]; });
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(sum), 0, 0, &sum);
    return out;
  }
  BigInt sum = 0;
  event.for_each([&](std::size_t i) { sum += scaled_[i]; });
  return sum;
}

Rational event_prob(const ProbabilitySpace& space, const EventSet& event) {
  return Rational(space.measure_numerator(event), space.common_denominator());
}

EventSet intersect_all(std::span<const EventSet> facts, std::size_t universe_size) {
  EventSet out = EventSet::full(universe_size);
  for (const auto& f : facts) out &= f;
  return out;
}

std::optional<Rational> conditional_prob(const ProbabilitySpace& space, const EventSet& event,
                                         const EventSet& given) {
  check_universe(space, event);
  const BigInt given_mass = space.measure_numerator(given);
  if (given_mass == 0) return std::nullopt;
  return Rational(space.measure_numerator(event & given), given_mass);
}

}  // namespace persuasion
