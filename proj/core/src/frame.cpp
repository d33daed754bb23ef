#include "ordent/frame.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

namespace ordent {

FrameOfDiscernment::FrameOfDiscernment(std::vector<std::string> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw Error(errc::empty_frame, "frame needs at least one element");
  }
  if (elements_.size() > kMaxFrameElements) {
    throw Error(errc::too_many_focal_elements,
                "frame has " + std::to_string(elements_.size()) + " elements, limit is " +
                    std::to_string(kMaxFrameElements));
  }
  std::unordered_set<std::string_view> seen;
  for (const std::string& name : elements_) {
    if (name.empty()) {
      throw Error(errc::duplicate_element, "element names must be nonempty");
    }
    if (!seen.insert(name).second) {
      throw Error(errc::duplicate_element, "duplicate element '" + name + "'");
    }
  }
}

std::size_t FrameOfDiscernment::index_of(std::string_view name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) {
    throw Error(errc::unknown_element, "unknown element '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

const std::string& FrameOfDiscernment::name_of(std::size_t index) const {
  if (index >= elements_.size()) {
    throw Error(errc::unknown_element,
                "element index " + std::to_string(index) + " out of range");
  }
  return elements_[index];
}

FocalElement::FocalElement(const FrameOfDiscernment& frame,
                           const std::vector<std::string>& members)
    : mask_(0) {
  if (members.empty()) {
    throw Error(errc::empty_subset, "focal element needs at least one member");
  }
  for (const std::string& name : members) {
    mask_ |= std::uint32_t{1} << frame.index_of(name);
  }
}

FocalElement FocalElement::from_mask(std::uint32_t mask) {
  if (mask == 0) {
    throw Error(errc::empty_subset, "the empty set cannot be a focal element");
  }
  return FocalElement(mask);
}

int FocalElement::cardinality() const noexcept { return std::popcount(mask_); }

std::vector<std::string> FocalElement::members(const FrameOfDiscernment& frame) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (contains(i)) out.push_back(frame.name_of(i));
  }
  return out;
}

std::string FocalElement::label(const FrameOfDiscernment& frame) const {
  std::vector<std::string> names = members(frame);
  if (names.size() == 1) return names.front();
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i != 0) out += ',';
    out += names[i];
  }
  out += '}';
  return out;
}

BasicProbabilityAssignment::BasicProbabilityAssignment(FrameOfDiscernment frame,
                                                       std::vector<MassEntry> entries)
    : frame_(std::move(frame)), entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw Error(errc::mass_sum_violation, "assignment needs at least one focal element");
  }
  // Frame sizes are capped well below 32, so the shift is always in range.
  const std::uint32_t frame_mask = (std::uint32_t{1} << frame_.size()) - 1;
  std::unordered_set<std::uint32_t> seen;
  double sum = 0.0;
  for (const MassEntry& entry : entries_) {
    if ((entry.focal.mask() & ~frame_mask) != 0) {
      throw Error(errc::unknown_element, "focal element mask exceeds the frame");
    }
    if (!(entry.mass > 0.0)) {
      throw Error(errc::nonpositive_mass,
                  "mass " + std::to_string(entry.mass) + " on " + entry.focal.label(frame_) +
                      " must be positive");
    }
    if (!seen.insert(entry.focal.mask()).second) {
      throw Error(errc::duplicate_focal,
                  "duplicate focal element " + entry.focal.label(frame_));
    }
    sum += entry.mass;
  }
  if (std::abs(sum - 1.0) > kMassSumTolerance) {
    throw Error(errc::mass_sum_violation,
                "masses sum to " + std::to_string(sum) + ", expected 1 within 1e-9");
  }
}

}  // namespace ordent
