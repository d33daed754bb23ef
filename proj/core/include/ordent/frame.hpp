#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ordent/error.hpp"

namespace ordent {

// Subset bookkeeping uses a 32-bit mask, so frames are capped well below that;
// exhaustive ordering enumeration keeps practical sizes far smaller anyway.
inline constexpr std::size_t kMaxFrameElements = 20;

// Tolerance applied to the mass-sum check after rational-to-double conversion.
inline constexpr double kMassSumTolerance = 1e-9;

// Ordered registry of the named base outcomes under consideration.
// The element order fixes the bit index used by FocalElement masks.
class FrameOfDiscernment {
 public:
  explicit FrameOfDiscernment(std::vector<std::string> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }

  std::size_t index_of(std::string_view name) const;
  const std::string& name_of(std::size_t index) const;

  bool operator==(const FrameOfDiscernment& other) const = default;

 private:
  std::vector<std::string> elements_;
};

// Nonempty subset of a frame, stored as a bitmask over the frame's element
// order. The empty set is not representable as a focal element.
class FocalElement {
 public:
  FocalElement(const FrameOfDiscernment& frame, const std::vector<std::string>& members);

  static FocalElement from_mask(std::uint32_t mask);

  std::uint32_t mask() const noexcept { return mask_; }
  int cardinality() const noexcept;
  bool contains(std::size_t index) const noexcept { return (mask_ >> index) & 1u; }

  std::vector<std::string> members(const FrameOfDiscernment& frame) const;

  // "P1" for singletons, "{P1,P2}" for composite subsets.
  std::string label(const FrameOfDiscernment& frame) const;

  friend auto operator<=>(const FocalElement&, const FocalElement&) = default;

 private:
  explicit FocalElement(std::uint32_t mask) : mask_(mask) {}

  std::uint32_t mask_;
};

struct MassEntry {
  FocalElement focal;
  double mass;
};

// Validated allocation of total belief 1 across distinct focal elements.
// Entry order is preserved exactly as given.
class BasicProbabilityAssignment {
 public:
  BasicProbabilityAssignment(FrameOfDiscernment frame, std::vector<MassEntry> entries);

  const FrameOfDiscernment& frame() const noexcept { return frame_; }
  const std::vector<MassEntry>& entries() const noexcept { return entries_; }
  std::size_t focal_count() const noexcept { return entries_.size(); }

 private:
  FrameOfDiscernment frame_;
  std::vector<MassEntry> entries_;
};

}  // namespace ordent
