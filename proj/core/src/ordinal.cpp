#include "ordent/ordinal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ordent {

OrdinalAssignment::OrdinalAssignment(FrameOfDiscernment frame, std::vector<OrdinalSlot> slots)
    : frame_(std::move(frame)), slots_(std::move(slots)) {
  std::sort(slots_.begin(), slots_.end(),
            [](const OrdinalSlot& a, const OrdinalSlot& b) { return a.position < b.position; });
  const int n = static_cast<int>(slots_.size());
  for (int j = 0; j < n; ++j) {
    if (slots_[static_cast<std::size_t>(j)].position != j + 1) {
      throw Error(errc::position_out_of_range,
                  "positions must be exactly 1.." + std::to_string(n) +
                      " with no gaps or repeats");
    }
  }
  // The slots must also form a valid assignment; run the shared checks.
  std::vector<MassEntry> entries;
  entries.reserve(slots_.size());
  for (const OrdinalSlot& slot : slots_) entries.push_back({slot.focal, slot.mass});
  BasicProbabilityAssignment check(frame_, std::move(entries));
}

OrdinalAssignment OrdinalAssignment::with_positions(const BasicProbabilityAssignment& bpa,
                                                    std::span<const int> positions) {
  if (positions.size() != bpa.focal_count()) {
    throw Error(errc::position_out_of_range,
                "got " + std::to_string(positions.size()) + " positions for " +
                    std::to_string(bpa.focal_count()) + " focal elements");
  }
  std::vector<OrdinalSlot> slots;
  slots.reserve(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    slots.push_back({positions[i], bpa.entries()[i].focal, bpa.entries()[i].mass});
  }
  return OrdinalAssignment(bpa.frame(), std::move(slots));
}

const OrdinalSlot& OrdinalAssignment::at_position(int position) const {
  if (position < 1 || position > static_cast<int>(slots_.size())) {
    throw Error(errc::position_out_of_range,
                "position " + std::to_string(position) + " outside 1.." +
                    std::to_string(slots_.size()));
  }
  return slots_[static_cast<std::size_t>(position - 1)];
}

std::string OrdinalAssignment::sequence_label() const {
  std::string out;
  for (const OrdinalSlot& slot : slots_) {
    if (!out.empty()) out += " > ";
    out += slot.focal.label(frame_);
  }
  return out;
}

int position_weight(int slot_count, int position) {
  if (position < 1 || position > slot_count) {
    throw Error(errc::position_out_of_range,
                "position " + std::to_string(position) + " outside 1.." +
                    std::to_string(slot_count));
  }
  return slot_count - position + 1;
}

NormalizedValues normalize_values(const OrdinalAssignment& ordinal) {
  const int n = static_cast<int>(ordinal.slot_count());
  NormalizedValues out;
  out.weights.reserve(ordinal.slot_count());
  out.intermediate.reserve(ordinal.slot_count());
  out.values.reserve(ordinal.slot_count());
  double sum = 0.0;
  for (int j = 1; j <= n; ++j) {
    const int weight = position_weight(n, j);
    const double intermediate = ordinal.at_position(j).mass * weight;
    out.weights.push_back(weight);
    out.intermediate.push_back(intermediate);
    sum += intermediate;
  }
  for (double intermediate : out.intermediate) {
    out.values.push_back(intermediate / sum);
  }
  return out;
}

double pairwise_relative_entropy(double value_j, int cardinality_j, double value_b,
                                 int cardinality_b) {
  if (!(value_j > 0.0) || !(value_b > 0.0)) {
    throw Error(errc::nonpositive_value, "normalized values must be positive");
  }
  if (cardinality_j < 1 || cardinality_b < 1) {
    throw Error(errc::nonpositive_value, "cardinalities must be at least 1");
  }
  const double scaled_j = value_j / (std::exp2(static_cast<double>(cardinality_j)) - 1.0);
  const double scaled_b = value_b / (std::exp2(static_cast<double>(cardinality_b)) - 1.0);
  return value_j * std::log(scaled_j / scaled_b + std::numbers::e);
}

double individual_entropy(const NormalizedValues& values,
                          std::span<const int> cardinalities, int position) {
  const int n = static_cast<int>(values.values.size());
  if (position < 1 || position > n) {
    throw Error(errc::position_out_of_range,
                "position " + std::to_string(position) + " outside 1.." + std::to_string(n));
  }
  if (static_cast<int>(cardinalities.size()) != n) {
    throw Error(errc::position_out_of_range, "need one cardinality per position");
  }
  if (position == n) return 0.0;  // the last confirmation settles the frame
  const int j = position;
  double sum = 0.0;
  for (int b = j + 1; b <= n; ++b) {
    sum += pairwise_relative_entropy(values.values[j - 1], cardinalities[j - 1],
                                     values.values[b - 1], cardinalities[b - 1]);
  }
  return sum;
}

double integral_entropy(std::span<const double> iu) {
  double sum = 0.0;
  for (double value : iu) sum += value;
  return sum;
}

OrdinalEntropyReport::OrdinalEntropyReport(NormalizedValues values,
                                           std::vector<int> cardinalities,
                                           std::vector<double> pairwise_upper,
                                           std::vector<double> iu, double inu)
    : values_(std::move(values)),
      cardinalities_(std::move(cardinalities)),
      pairwise_(std::move(pairwise_upper)),
      iu_(std::move(iu)),
      inu_(inu) {
  verify_invariants();
}

double OrdinalEntropyReport::pairwise(int j, int b) const {
  const int n = static_cast<int>(iu_.size());
  if (j < 1 || b <= j || b > n) {
    throw Error(errc::position_out_of_range,
                "pairwise index (" + std::to_string(j) + "," + std::to_string(b) +
                    ") outside 1 <= j < b <= " + std::to_string(n));
  }
  // Row j starts after the first j-1 rows of lengths n-1, n-2, ...
  const std::size_t row_start =
      static_cast<std::size_t>((j - 1) * n - (j - 1) * j / 2);
  return pairwise_[row_start + static_cast<std::size_t>(b - j - 1)];
}

void OrdinalEntropyReport::verify_invariants() const {
  const std::size_t n = iu_.size();
  if (values_.values.size() != n || cardinalities_.size() != n ||
      pairwise_.size() != n * (n - 1) / 2) {
    throw Error(errc::internal, "report pieces disagree about the slot count");
  }
  if (n > 0 && iu_[n - 1] != 0.0) {
    throw Error(errc::internal, "last-position entropy must be exactly 0");
  }
  double sum = 0.0;
  for (double value : iu_) sum += value;
  if (std::abs(sum - inu_) > 1e-12) {
    throw Error(errc::internal, "INU does not match the sum of the IU vector");
  }
  for (double u : pairwise_) {
    if (!(u > 0.0)) {
      throw Error(errc::internal, "pairwise entries must be positive");
    }
  }
}

OrdinalEntropyReport compute_ordinal_entropy(const OrdinalAssignment& ordinal) {
  const int n = static_cast<int>(ordinal.slot_count());
  NormalizedValues values = normalize_values(ordinal);
  std::vector<int> cardinalities;
  cardinalities.reserve(ordinal.slot_count());
  for (int j = 1; j <= n; ++j) {
    cardinalities.push_back(ordinal.at_position(j).focal.cardinality());
  }

  std::vector<double> pairwise;
  pairwise.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  std::vector<double> iu(static_cast<std::size_t>(n), 0.0);
  for (int j = 1; j < n; ++j) {
    double row_sum = 0.0;
    for (int b = j + 1; b <= n; ++b) {
      const double u = pairwise_relative_entropy(values.values[j - 1], cardinalities[j - 1],
                                                 values.values[b - 1], cardinalities[b - 1]);
      pairwise.push_back(u);
      row_sum += u;
    }
    iu[static_cast<std::size_t>(j - 1)] = row_sum;
  }
  const double inu = integral_entropy(iu);
  return OrdinalEntropyReport(std::move(values), std::move(cardinalities),
                              std::move(pairwise), std::move(iu), inu);
}

}  // namespace ordent
