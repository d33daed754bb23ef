#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ordent/ordinal.hpp"

namespace ordent {

// Hard cap on exhaustive enumeration (10! = 3,628,800 orderings). Larger
// inputs are an explicit error rather than silent sampling.
inline constexpr std::size_t kMaxOrderingSlots = 10;

// Streams all n! orderings of a BPA in lexicographic order of the position
// tuple (positions[i] = position of entry i).
class OrderingEnumerator {
 public:
  explicit OrderingEnumerator(const BasicProbabilityAssignment& bpa);

  std::optional<OrdinalAssignment> next();
  std::span<const int> positions() const noexcept { return positions_; }

 private:
  const BasicProbabilityAssignment* bpa_;
  std::vector<int> positions_;
  bool exhausted_ = false;
  bool started_ = false;
};

// Materialized convenience for small n.
std::vector<OrdinalAssignment> enumerate_orderings(const BasicProbabilityAssignment& bpa);

// Per-ordering INU values plus their arithmetic mean, in enumeration order.
class PermutationReport {
 public:
  PermutationReport(std::size_t slot_count, std::vector<std::uint8_t> positions_flat,
                    std::vector<double> inu_values, double mean_inu);

  std::size_t count() const noexcept { return inu_values_.size(); }
  std::size_t slot_count() const noexcept { return slot_count_; }
  std::span<const std::uint8_t> positions(std::size_t index) const;
  double inu(std::size_t index) const { return inu_values_.at(index); }
  std::span<const double> inu_values() const noexcept { return inu_values_; }
  double mean_inu() const noexcept { return mean_inu_; }

 private:
  std::size_t slot_count_;
  std::vector<std::uint8_t> positions_flat_;
  std::vector<double> inu_values_;
  double mean_inu_;
};

// Evaluates INU for every ordering and averages; the sum runs in enumeration
// order so the mean is bit-reproducible.
PermutationReport average_inu(const BasicProbabilityAssignment& bpa);

}  // namespace ordent
