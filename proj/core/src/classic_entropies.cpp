#include "ordent/classic_entropies.hpp"

#include <algorithm>
#include <cmath>

namespace ordent {

EntropyValue::EntropyValue(double value) : value_(value) {
  if (!std::isfinite(value_) || value_ < 0.0) {
    throw Error(errc::internal, "entropy value " + std::to_string(value_) +
                                    " is not a finite nonnegative number");
  }
}

namespace {

// Summation runs over focal elements in ascending mask order so the result is
// bit-identical no matter how the entry list was ordered.
std::vector<MassEntry> canonical_entries(const BasicProbabilityAssignment& bpa) {
  std::vector<MassEntry> entries = bpa.entries();
  std::sort(entries.begin(), entries.end(),
            [](const MassEntry& a, const MassEntry& b) { return a.focal < b.focal; });
  return entries;
}

}  // namespace

EntropyValue dp_hartley_entropy(const BasicProbabilityAssignment& bpa) {
  double sum = 0.0;
  for (const MassEntry& entry : canonical_entries(bpa)) {
    sum += entry.mass * std::log2(static_cast<double>(entry.focal.cardinality()));
  }
  return EntropyValue(sum);
}

EntropyValue deng_entropy(const BasicProbabilityAssignment& bpa) {
  double sum = 0.0;
  for (const MassEntry& entry : canonical_entries(bpa)) {
    const double span = std::exp2(static_cast<double>(entry.focal.cardinality())) - 1.0;
    sum -= entry.mass * std::log2(entry.mass / span);
  }
  return EntropyValue(sum);
}

}  // namespace ordent
