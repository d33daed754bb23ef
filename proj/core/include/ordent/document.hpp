#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordent/frame.hpp"
#include "ordent/ordinal.hpp"

namespace ordent {

// Parses a mass literal: either a decimal ("0.25") or a rational "p/q"
// ("7/12"). Rationals avoid decimal transcription error in inputs.
double parse_mass(const std::string& text);

struct FocalEntry {
  std::vector<std::string> members;
  std::string mass;  // kept verbatim so emission round-trips bit-for-bit
};

// JSON input document:
//   {
//     "elements": ["P1","P2","P3"],
//     "focals": [{"members":["P1"],"mass":"1/3"}, ...],
//     "ordering": [1,2,3]            // optional, position of focals[i]
//   }
struct FrameDocument {
  std::vector<std::string> elements;
  std::vector<FocalEntry> focals;
  std::optional<std::vector<int>> ordering;

  static FrameDocument from_json(const std::string& text);
  std::string to_json(int indent = 2) const;

  bool has_ordering() const noexcept { return ordering.has_value(); }
  BasicProbabilityAssignment to_bpa() const;
  OrdinalAssignment to_ordinal() const;  // schema_error when no ordering
};

}  // namespace ordent
