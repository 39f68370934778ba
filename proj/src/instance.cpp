#include "persuasion/instance.hpp"

#include <algorithm>
#include <string>

#include "persuasion/error.hpp"

namespace persuasion {

Report::Report(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

void validate(const PersuasionInstance& instance) {
  if (instance.threshold.sign() <= 0 || instance.threshold > Rational(1)) {
    throw Error(Errc::threshold_out_of_range,
                "threshold must lie in (0, 1], got " + instance.threshold.str());
  }
  const std::size_t n = instance.space.size();
  if (instance.focal.universe_size() != n) {
    throw Error(Errc::universe_mismatch, "focal event universe does not match the space");
  }
  for (std::size_t i = 0; i < instance.facts.size(); ++i) {
    if (instance.facts[i].universe_size() != n) {
      throw Error(Errc::universe_mismatch, "fact " + std::to_string(i) + " universe does not match the space");
    }
  }
}

void validate(const ExactCoverInstance& instance) {
  for (std::size_t i = 0; i < instance.blocks.size(); ++i) {
    if (instance.blocks[i].universe_size() != instance.universe_size) {
      throw Error(Errc::universe_mismatch, "block " + std::to_string(i) + " universe does not match");
    }
  }
}

EventSet report_intersection(const PersuasionInstance& instance, const Report& report) {
  EventSet cut = instance.space.full_event();
  for (std::size_t i : report.indices()) {
    if (i >= instance.facts.size()) {
      throw Error(Errc::index_out_of_range, "report names fact " + std::to_string(i) + " but the instance has " +
                                                std::to_string(instance.facts.size()));
    }
    cut &= instance.facts[i];
  }
  return cut;
}

bool verify_certificate(const PersuasionInstance& instance, const Report& report) {
  const EventSet cut = report_intersection(instance, report);
  const BigInt given = instance.space.measure_numerator(cut);
  if (given == 0) return false;
  const BigInt hit = instance.space.measure_numerator(cut & instance.focal);
  // hit/given >= p_n/p_d, cross-multiplied; both denominators are positive.
  return hit * instance.threshold.den() >= instance.threshold.num() * given;
}

ModelSelectionView::ModelSelectionView(PersuasionInstance base, std::optional<ModelPrior> prior)
    : base_(std::move(base)), prior_(std::move(prior)) {
  validate(base_);
  if (!prior_) return;
  Rational total;
  for (const auto& [model, weight] : *prior_) {
    if (weight.sign() < 0) throw Error(Errc::negative_weight, "model prior weight is negative");
    for (std::size_t i : model.indices()) {
      if (i >= base_.facts.size()) {
        throw Error(Errc::index_out_of_range, "model prior names fact " + std::to_string(i));
      }
    }
    total += weight;
  }
  if (total != Rational(1)) {
    throw Error(Errc::weights_not_summing_to_one, "model prior sums to " + total.str());
  }
}

std::optional<Rational> model_likelihood(const ModelSelectionView& view, const Report& model) {
  const auto& inst = view.base();
  return conditional_prob(inst.space, inst.focal, report_intersection(inst, model));
}

}  // namespace persuasion
