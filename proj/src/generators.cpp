#include "persuasion/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "persuasion/error.hpp"
#include "persuasion/rng.hpp"

namespace persuasion {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::bad_params, what); }

void expect_family(const GenParams& p, Family f) {
  if (p.family != f) bad(std::string("generator for family ") + to_string(f) + " called with " + to_string(p.family));
}

void check_density(const Rational& d, const char* name) {
  if (d.sign() <= 0 || d >= Rational(1)) bad(std::string(name) + " must lie in (0, 1), got " + d.str());
}

void check_threshold(const Rational& p) {
  if (p.sign() <= 0 || p > Rational(1)) bad("threshold must lie in (0, 1], got " + p.str());
}

void check_persuasion_params(const GenParams& p) {
  if (p.num_outcomes < 2) bad("num_outcomes must be at least 2");
  check_density(p.fact_density, "fact_density");
  check_threshold(p.threshold);
}

ProbabilitySpace uniform_space(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i));
  return make_space(std::move(labels), std::vector<Rational>(n, Rational(1, static_cast<long>(n))));
}

EventSet random_subset(Rng& rng, std::size_t n, double density) {
  EventSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.bernoulli(density)) s.insert(i);
  }
  return s;
}

template <typename Accept>
EventSet random_focal(Rng& rng, std::size_t n, Accept&& accept) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    EventSet focal = random_subset(rng, n, 0.5);
    if (!focal.empty() && !focal.is_full() && accept(focal)) return focal;
  }
  bad("no acceptable focal event after 100 attempts");
}

}  // namespace

const char* to_string(Family family) noexcept {
  switch (family) {
    case Family::uniform: return "uniform";
    case Family::planted: return "planted";
    case Family::gaussian_cherry: return "gaussian_cherry";
    case Family::xc_random: return "xc_random";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::uniform, Family::planted, Family::gaussian_cherry, Family::xc_random}) {
    if (name == to_string(f)) return f;
  }
  bad("unknown family \"" + std::string(name) + "\"");
}

PersuasionInstance gen_uniform(const GenParams& params) {
  expect_family(params, Family::uniform);
  check_persuasion_params(params);
  Rng rng(params.seed);
  const std::size_t n = params.num_outcomes;
  const double density = params.fact_density.to_double();
  EventSet focal = random_focal(rng, n, [](const EventSet&) { return true; });
  std::vector<EventSet> facts;
  for (std::size_t j = 0; j < params.num_facts; ++j) facts.push_back(random_subset(rng, n, density));
  return PersuasionInstance{uniform_space(n), std::move(focal), std::move(facts), params.threshold};
}

PlantedInstance gen_planted(const GenParams& params) {
  expect_family(params, Family::planted);
  check_persuasion_params(params);
  if (params.planted_size > params.num_facts) bad("planted_size exceeds num_facts");
  Rng rng(params.seed);
  const std::size_t n = params.num_outcomes;
  const std::size_t k = params.planted_size;
  const double density = params.fact_density.to_double();
  auto space = uniform_space(n);

  EventSet focal = random_focal(rng, n, [&](const EventSet& e) {
    return k > 0 || event_prob(space, e) >= params.threshold;
  });

  // Core: one focal outcome plus more focal outcomes at fact density.
  const auto focal_members = focal.indices();
  EventSet core(n);
  core.insert(focal_members[rng.below(focal_members.size())]);
  for (auto w : focal_members) {
    if (rng.bernoulli(density)) core.insert(w);
  }

  std::vector<std::size_t> order(params.num_facts);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = 0; i < k; ++i) std::swap(order[i], order[i + rng.below(order.size() - i)]);
  std::vector<std::size_t> planted(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(planted.begin(), planted.end());

  std::vector<EventSet> facts;
  for (std::size_t j = 0; j < params.num_facts; ++j) {
    EventSet fact = random_subset(rng, n, density);
    if (std::binary_search(planted.begin(), planted.end(), j)) fact |= core;
    facts.push_back(std::move(fact));
  }
  if (k > 0) {
    EventSet cut = EventSet::full(n);
    for (auto j : planted) cut &= facts[j];
    facts[planted.back()] -= cut - core;
  }

  PlantedInstance out{PersuasionInstance{std::move(space), std::move(focal), std::move(facts), params.threshold},
                      Report(std::move(planted))};
  return out;
}

PersuasionInstance gen_gaussian_cherry(const GenParams& params) {
  expect_family(params, Family::gaussian_cherry);
  check_threshold(params.threshold);
  if (params.grid_cells < 3 || params.grid_cells % 2 == 0) bad("grid_cells must be odd and at least 3");
  if (!std::isfinite(params.effect_size)) bad("effect_size must be finite");
  Rng rng(params.seed);
  const auto half = static_cast<long>(params.grid_cells / 2);
  const double spacing = kGaussianGridHalfWidth / static_cast<double>(half);
  const std::size_t n = params.grid_cells;

  std::vector<std::string> labels;
  std::vector<BigInt> mass;
  BigInt total = 0;
  for (long k = -half; k <= half; ++k) {
    const double mu = static_cast<double>(k) * spacing;
    const double density = std::exp(-0.5 * mu * mu) / std::sqrt(2.0 * std::numbers::pi);
    BigInt rounded(static_cast<long>(std::llround(density * 1e9)));
    total += rounded;
    mass.push_back(std::move(rounded));
    labels.push_back("mu" + std::to_string(k));
  }
  if (total == 0) bad("discretised prior has zero mass");
  std::vector<Rational> weights;
  for (const auto& m : mass) weights.emplace_back(m, total);

  EventSet focal(n);
  for (long k = 1; k <= half; ++k) focal.insert(static_cast<std::size_t>(k + half));

  std::vector<EventSet> facts;
  for (std::size_t j = 0; j < params.num_draws; ++j) {
    const double draw = params.effect_size + rng.normal();
    const long m = static_cast<long>(std::llround(draw / spacing));
    EventSet fact(n);
    for (long k = -half; k <= half; ++k) {
      if (k * (k - 2 * m) <= 0) fact.insert(static_cast<std::size_t>(k + half));
    }
    facts.push_back(std::move(fact));
  }
  return PersuasionInstance{make_space(std::move(labels), std::move(weights)), std::move(focal), std::move(facts),
                            params.threshold};
}

ExactCoverInstance gen_xc_random(const GenParams& params) {
  expect_family(params, Family::xc_random);
  check_density(params.block_density, "block_density");
  Rng rng(params.seed);
  const double density = params.block_density.to_double();
  ExactCoverInstance xc{params.universe, {}};
  for (std::size_t b = 0; b < params.num_blocks; ++b) xc.blocks.push_back(random_subset(rng, params.universe, density));
  return xc;
}

}  // namespace persuasion
