#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "persuasion/event_set.hpp"
#include "persuasion/probability_space.hpp"
#include "persuasion/rational.hpp"

namespace persuasion {

// Does some subset of `facts` raise P(focal | subset) to at least `threshold`?
struct PersuasionInstance {
  ProbabilitySpace space;
  EventSet focal;
  std::vector<EventSet> facts;
  Rational threshold;

  std::size_t num_facts() const noexcept { return facts.size(); }
};

// A subset of fact indices: the certificate for a YES instance.
class Report {
 public:
  Report() = default;
  // Sorts and removes duplicates.
  explicit Report(std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }

  friend bool operator==(const Report&, const Report&) = default;

 private:
  std::vector<std::size_t> indices_;
};

// Universe S = {0..universe_size-1} and a collection of blocks over it.
struct ExactCoverInstance {
  std::size_t universe_size = 0;
  std::vector<EventSet> blocks;

  std::size_t num_blocks() const noexcept { return blocks.size(); }
};

// Throws ThresholdOutOfRange or UniverseMismatch.
void validate(const PersuasionInstance& instance);
// Throws UniverseMismatch when a block is over a different universe.
void validate(const ExactCoverInstance& instance);

// Intersection of the reported facts. Throws IndexOutOfRange.
EventSet report_intersection(const PersuasionInstance& instance, const Report& report);

// Certificate check: P(focal | ∩ report) is defined and >= threshold.
// Linear in |outcomes| * (|report| + 1). Throws IndexOutOfRange.
bool verify_certificate(const PersuasionInstance& instance, const Report& report);

// Model-selection reading of the same instance: every report is a model, and
// its likelihood for the focal event is P(focal | ∩ model). The optional prior
// over models is carried but never consulted by the decision.
class ModelSelectionView {
 public:
  using ModelPrior = std::vector<std::pair<Report, Rational>>;

  // Throws on an invalid base instance, or a prior with negative weights,
  // weights not summing to one, or out-of-range model indices.
  explicit ModelSelectionView(PersuasionInstance base, std::optional<ModelPrior> prior = std::nullopt);

  const PersuasionInstance& base() const noexcept { return base_; }
  const std::optional<ModelPrior>& model_prior() const noexcept { return prior_; }

 private:
  PersuasionInstance base_;
  std::optional<ModelPrior> prior_;
};

// nullopt when the model's facts intersect in a null set. Throws IndexOutOfRange.
std::optional<Rational> model_likelihood(const ModelSelectionView& view, const Report& model);

}  // namespace persuasion
