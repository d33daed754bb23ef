#pragma once

#include <span>
#include <string>
#include <vector>

#include "ordent/frame.hpp"

namespace ordent {

struct OrdinalSlot {
  int position;  // confirmation position, 1-based
  FocalElement focal;
  double mass;
};

// A basic probability assignment whose focal elements carry a total
// confirmation order: positions are exactly {1..n}, position 1 first.
class OrdinalAssignment {
 public:
  OrdinalAssignment(FrameOfDiscernment frame, std::vector<OrdinalSlot> slots);

  // Attaches positions to the entries of an existing assignment;
  // positions[i] is the confirmation position of entry i.
  static OrdinalAssignment with_positions(const BasicProbabilityAssignment& bpa,
                                          std::span<const int> positions);

  std::size_t slot_count() const noexcept { return slots_.size(); }
  const std::vector<OrdinalSlot>& slots() const noexcept { return slots_; }
  const OrdinalSlot& at_position(int position) const;
  const FrameOfDiscernment& frame() const noexcept { return frame_; }

  // Focal labels in confirmation order, e.g. "P1 > {P1,P2} > P2".
  std::string sequence_label() const;

 private:
  FrameOfDiscernment frame_;
  std::vector<OrdinalSlot> slots_;  // sorted by position
};

// Position-weighted modification of the masses: weight, intermediate value
// mass*weight, and the normalized final values (indexed by position - 1).
struct NormalizedValues {
  std::vector<int> weights;
  std::vector<double> intermediate;
  std::vector<double> values;  // positive, sums to 1
};

// Full result of the ordinal pipeline: pairwise matrix U(j,b) for j < b,
// per-position IU vector (last entry exactly 0) and their total INU.
class OrdinalEntropyReport {
 public:
  OrdinalEntropyReport(NormalizedValues values, std::vector<int> cardinalities,
                       std::vector<double> pairwise_upper, std::vector<double> iu,
                       double inu);

  std::size_t slot_count() const noexcept { return iu_.size(); }
  double pairwise(int j, int b) const;  // 1 <= j < b <= n
  std::span<const double> iu() const noexcept { return iu_; }
  double inu() const noexcept { return inu_; }
  const NormalizedValues& values() const noexcept { return values_; }
  std::span<const int> cardinalities() const noexcept { return cardinalities_; }

 private:
  void verify_invariants() const;

  NormalizedValues values_;
  std::vector<int> cardinalities_;   // by position
  std::vector<double> pairwise_;     // upper triangle, row-major
  std::vector<double> iu_;
  double inu_;
};

// Linear position weight n - position + 1.
int position_weight(int slot_count, int position);

NormalizedValues normalize_values(const OrdinalAssignment& ordinal);

// value_j * ln( (value_j / (2^card_j - 1)) / (value_b / (2^card_b - 1)) + e ),
// natural log. Always >= value_j since the ratio is nonnegative.
double pairwise_relative_entropy(double value_j, int cardinality_j,
                                 double value_b, int cardinality_b);

// Staged entropy of one position against all later ones; exactly 0 for the
// last position.
double individual_entropy(const NormalizedValues& values,
                          std::span<const int> cardinalities, int position);

double integral_entropy(std::span<const double> iu);

OrdinalEntropyReport compute_ordinal_entropy(const OrdinalAssignment& ordinal);

}  // namespace ordent
