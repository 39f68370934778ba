#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "persuasion/instance.hpp"

namespace persuasion {

enum class Family { uniform, planted, gaussian_cherry, xc_random };

const char* to_string(Family family) noexcept;
// Throws BadParams for an unknown name.
Family family_from_string(std::string_view name);

struct GenParams {
  Family family = Family::uniform;
  std::size_t num_outcomes = 6;
  std::size_t num_facts = 5;
  Rational fact_density{1, 2};
  Rational threshold{1, 2};
  std::uint64_t seed = 42;
  // planted
  std::size_t planted_size = 2;
  // gaussian_cherry
  std::size_t num_draws = 8;
  std::size_t grid_cells = 41;
  double effect_size = 0.0;
  // xc_random
  std::size_t universe = 4;
  std::size_t num_blocks = 4;
  Rational block_density{1, 2};
};

// Mean hypotheses of the cherry-picking family span [-4, 4] null standard
// deviations.
inline constexpr double kGaussianGridHalfWidth = 4.0;

// Uniform weights; every fact contains each outcome independently with
// probability fact_density; focal is a random nonempty proper subset
// (resampled up to 100 times).
PersuasionInstance gen_uniform(const GenParams& params);

struct PlantedInstance {
  PersuasionInstance instance;
  Report planted;
};

// A uniform-style instance with planted_size facts whose intersection is a
// nonempty core inside the focal event, so the planted report certifies YES.
// With planted_size 0 the focal event is resampled until its prior meets the
// threshold.
PlantedInstance gen_planted(const GenParams& params);

// Outcomes are grid_cells mean hypotheses mu_k = k h (k = -K..K, h = 4/K)
// with a discretised standard normal prior rounded to 1e-9 before
// normalisation. Draw j is d_j ~ N(effect_size, 1) rounded to the grid
// (d_j = m_j h), and fact j is the set of hypotheses under which d_j is at
// least as likely as under mu = 0, i.e. k (k - 2 m_j) <= 0. The focal event
// is {mu > 0}.
PersuasionInstance gen_gaussian_cherry(const GenParams& params);

// num_blocks blocks over {0..universe-1}, each element included with
// probability block_density.
ExactCoverInstance gen_xc_random(const GenParams& params);

}  // namespace persuasion
