#pragma once

#include "ordent/frame.hpp"

namespace ordent {

// Nonnegative, finite entropy amount. Both classic measures use log base 2.
class EntropyValue {
 public:
  explicit EntropyValue(double value);

  double value() const noexcept { return value_; }

 private:
  double value_;
};

// Dubois & Prade weighted Hartley entropy: sum of m(A) * log2 |A|.
// Zero whenever every focal element is a singleton.
EntropyValue dp_hartley_entropy(const BasicProbabilityAssignment& bpa);

// Deng entropy: -sum of m(A) * log2( m(A) / (2^|A| - 1) ).
// Reduces to Shannon entropy when every focal element is a singleton.
EntropyValue deng_entropy(const BasicProbabilityAssignment& bpa);

}  // namespace ordent
