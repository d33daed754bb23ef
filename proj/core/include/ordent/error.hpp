#pragma once

#include <stdexcept>
#include <string>

namespace ordent {

// Failure categories surfaced by the library. CLI exit codes map parse/schema
// and validation failures to 2 and internal invariant breaches to 3.
enum class errc {
  empty_frame,
  duplicate_element,
  unknown_element,
  empty_subset,
  mass_sum_violation,
  nonpositive_mass,
  duplicate_focal,
  position_out_of_range,
  nonpositive_value,
  too_many_focal_elements,
  parse_error,
  schema_error,
  internal,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace ordent
