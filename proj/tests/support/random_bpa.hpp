#pragma once

// Seeded generators for randomized property checks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "ordent/frame.hpp"

namespace testgen {

// All nonempty subsets of a 6-element frame with cardinality <= max_card.
inline std::vector<std::uint32_t> small_masks(int max_card) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask < (1u << 6); ++mask) {
    if (std::popcount(mask) <= max_card) masks.push_back(mask);
  }
  return masks;
}

// Random BPA over a 6-element frame: focal_count in [1, max_focals] distinct
// subsets of cardinality 1..3, positive masses normalized to sum 1.
inline ordent::BasicProbabilityAssignment random_bpa(std::mt19937& rng,
                                                     int max_focals = 6) {
  static const std::vector<std::uint32_t> pool = small_masks(3);
  std::uniform_int_distribution<int> count_dist(1, max_focals);
  const int count = count_dist(rng);

  std::vector<std::uint32_t> masks = pool;
  std::shuffle(masks.begin(), masks.end(), rng);
  masks.resize(static_cast<std::size_t>(count));

  std::uniform_real_distribution<double> mass_dist(0.05, 1.0);
  std::vector<double> raw(static_cast<std::size_t>(count));
  double sum = 0.0;
  for (double& m : raw) {
    m = mass_dist(rng);
    sum += m;
  }

  std::vector<ordent::MassEntry> entries;
  entries.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    entries.push_back({ordent::FocalElement::from_mask(masks[i]), raw[i] / sum});
  }
  ordent::FrameOfDiscernment frame({"P1", "P2", "P3", "P4", "P5", "P6"});
  return ordent::BasicProbabilityAssignment(std::move(frame), std::move(entries));
}

// Equal masses on focal elements that all share one cardinality.
inline ordent::BasicProbabilityAssignment symmetric_bpa(std::mt19937& rng,
                                                        int max_focals = 5) {
  std::uniform_int_distribution<int> count_dist(1, max_focals);
  std::uniform_int_distribution<int> card_dist(1, 3);
  const int count = count_dist(rng);
  const int card = card_dist(rng);

  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask < (1u << 6); ++mask) {
    if (std::popcount(mask) == card) masks.push_back(mask);
  }
  std::shuffle(masks.begin(), masks.end(), rng);

  std::vector<ordent::MassEntry> entries;
  for (int i = 0; i < count; ++i) {
    entries.push_back({ordent::FocalElement::from_mask(masks[static_cast<std::size_t>(i)]),
                       1.0 / count});
  }
  ordent::FrameOfDiscernment frame({"P1", "P2", "P3", "P4", "P5", "P6"});
  return ordent::BasicProbabilityAssignment(std::move(frame), std::move(entries));
}

}  // namespace testgen
