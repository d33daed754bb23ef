#include "ordent/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace ordent {

OrderingEnumerator::OrderingEnumerator(const BasicProbabilityAssignment& bpa) : bpa_(&bpa) {
  const std::size_t n = bpa.focal_count();
  if (n > kMaxOrderingSlots) {
    throw Error(errc::too_many_focal_elements,
                std::to_string(n) + " focal elements would need " + std::to_string(n) +
                    "! orderings; the cap is " + std::to_string(kMaxOrderingSlots));
  }
  positions_.resize(n);
  std::iota(positions_.begin(), positions_.end(), 1);
}

std::optional<OrdinalAssignment> OrderingEnumerator::next() {
  if (exhausted_) return std::nullopt;
  if (started_ && !std::next_permutation(positions_.begin(), positions_.end())) {
    exhausted_ = true;
    return std::nullopt;
  }
  started_ = true;
  return OrdinalAssignment::with_positions(*bpa_, positions_);
}

std::vector<OrdinalAssignment> enumerate_orderings(const BasicProbabilityAssignment& bpa) {
  std::vector<OrdinalAssignment> out;
  OrderingEnumerator enumerator(bpa);
  while (auto ordinal = enumerator.next()) {
    out.push_back(std::move(*ordinal));
  }
  return out;
}

PermutationReport::PermutationReport(std::size_t slot_count,
                                     std::vector<std::uint8_t> positions_flat,
                                     std::vector<double> inu_values, double mean_inu)
    : slot_count_(slot_count),
      positions_flat_(std::move(positions_flat)),
      inu_values_(std::move(inu_values)),
      mean_inu_(mean_inu) {
  if (positions_flat_.size() != slot_count_ * inu_values_.size()) {
    throw Error(errc::internal, "per-ordering storage does not match the ordering count");
  }
}

std::span<const std::uint8_t> PermutationReport::positions(std::size_t index) const {
  if (index >= count()) {
    throw Error(errc::position_out_of_range,
                "ordering index " + std::to_string(index) + " outside 0.." +
                    std::to_string(count()));
  }
  return std::span<const std::uint8_t>(positions_flat_.data() + index * slot_count_,
                                       slot_count_);
}

PermutationReport average_inu(const BasicProbabilityAssignment& bpa) {
  const std::size_t n = bpa.focal_count();
  OrderingEnumerator enumerator(bpa);
  std::vector<std::uint8_t> positions_flat;
  std::vector<double> inu_values;
  double sum = 0.0;
  while (auto ordinal = enumerator.next()) {
    for (int p : enumerator.positions()) {
      positions_flat.push_back(static_cast<std::uint8_t>(p));
    }
    const double inu = compute_ordinal_entropy(*ordinal).inu();
    inu_values.push_back(inu);
    sum += inu;
  }
  const double mean = sum / static_cast<double>(inu_values.size());
  return PermutationReport(n, std::move(positions_flat), std::move(inu_values), mean);
}

}  // namespace ordent
