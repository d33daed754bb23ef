#include "ordent/error.hpp"

namespace ordent {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::empty_frame: return "empty_frame";
    case errc::duplicate_element: return "duplicate_element";
    case errc::unknown_element: return "unknown_element";
    case errc::empty_subset: return "empty_subset";
    case errc::mass_sum_violation: return "mass_sum_violation";
    case errc::nonpositive_mass: return "nonpositive_mass";
    case errc::duplicate_focal: return "duplicate_focal";
    case errc::position_out_of_range: return "position_out_of_range";
    case errc::nonpositive_value: return "nonpositive_value";
    case errc::too_many_focal_elements: return "too_many_focal_elements";
    case errc::parse_error: return "parse_error";
    case errc::schema_error: return "schema_error";
    case errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace ordent
