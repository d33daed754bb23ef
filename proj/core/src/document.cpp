#include "ordent/document.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include <json.hpp>

namespace ordent {

namespace {

std::string trimmed(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t");
  return text.substr(begin, end - begin + 1);
}

long long parse_integer(const std::string& text, const std::string& whole) {
  errno = 0;
  char* end = nullptr;
  const long long value = std::strtoll(text.c_str(), &end, 10);
  if (errno != 0 || end == text.c_str() || *end != '\0') {
    throw Error(errc::parse_error, "bad rational mass '" + whole + "'");
  }
  return value;
}

// Rethrows a nested failure with the JSON path prepended.
[[noreturn]] void rethrow_at(const Error& error, const std::string& path) {
  throw Error(error.code(), path + ": " + error.what());
}

}  // namespace

double parse_mass(const std::string& text) {
  const std::string body = trimmed(text);
  if (body.empty()) {
    throw Error(errc::parse_error, "empty mass literal");
  }
  if (const auto slash = body.find('/'); slash != std::string::npos) {
    const long long num = parse_integer(trimmed(body.substr(0, slash)), body);
    const long long den = parse_integer(trimmed(body.substr(slash + 1)), body);
    if (den == 0) {
      throw Error(errc::parse_error, "zero denominator in '" + body + "'");
    }
    return static_cast<double>(num) / static_cast<double>(den);
  }
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(body.c_str(), &end);
  if (errno != 0 || end == body.c_str() || *end != '\0') {
    throw Error(errc::parse_error, "bad mass literal '" + body + "'");
  }
  return value;
}

FrameDocument FrameDocument::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(errc::schema_error, "top level must be an object");
  }

  FrameDocument out;
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    throw Error(errc::schema_error, "elements: expected an array of strings");
  }
  for (const auto& element : doc["elements"]) {
    if (!element.is_string()) {
      throw Error(errc::schema_error, "elements: expected an array of strings");
    }
    out.elements.push_back(element.get<std::string>());
  }

  if (!doc.contains("focals") || !doc["focals"].is_array() || doc["focals"].empty()) {
    throw Error(errc::schema_error, "focals: expected a nonempty array");
  }
  std::size_t index = 0;
  for (const auto& focal : doc["focals"]) {
    const std::string path = "focals[" + std::to_string(index) + "]";
    if (!focal.is_object() || !focal.contains("members") || !focal.contains("mass")) {
      throw Error(errc::schema_error, path + ": expected {members, mass}");
    }
    FocalEntry entry;
    if (!focal["members"].is_array()) {
      throw Error(errc::schema_error, path + ".members: expected an array of strings");
    }
    for (const auto& member : focal["members"]) {
      if (!member.is_string()) {
        throw Error(errc::schema_error, path + ".members: expected an array of strings");
      }
      entry.members.push_back(member.get<std::string>());
    }
    if (!focal["mass"].is_string()) {
      throw Error(errc::schema_error,
                  path + ".mass: expected a string (decimal or \"p/q\")");
    }
    entry.mass = focal["mass"].get<std::string>();
    out.focals.push_back(std::move(entry));
    ++index;
  }

  if (doc.contains("ordering")) {
    if (!doc["ordering"].is_array()) {
      throw Error(errc::schema_error, "ordering: expected an array of integers");
    }
    std::vector<int> ordering;
    for (const auto& position : doc["ordering"]) {
      if (!position.is_number_integer()) {
        throw Error(errc::schema_error, "ordering: expected an array of integers");
      }
      ordering.push_back(position.get<int>());
    }
    out.ordering = std::move(ordering);
  }

  for (const auto& [key, value] : doc.items()) {
    if (key != "elements" && key != "focals" && key != "ordering") {
      throw Error(errc::schema_error, "unknown key '" + key + "'");
    }
  }

  if (out.ordering) {
    if (out.ordering->size() != out.focals.size()) {
      throw Error(errc::schema_error,
                  "ordering: got " + std::to_string(out.ordering->size()) +
                      " positions for " + std::to_string(out.focals.size()) + " focals");
    }
    std::vector<int> sorted = *out.ordering;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<int>(i) + 1) {
        throw Error(errc::schema_error, "ordering: not a permutation of 1.." +
                                            std::to_string(sorted.size()));
      }
    }
  }
  return out;
}

std::string FrameDocument::to_json(int indent) const {
  nlohmann::json doc;
  doc["elements"] = elements;
  doc["focals"] = nlohmann::json::array();
  for (const FocalEntry& entry : focals) {
    doc["focals"].push_back({{"members", entry.members}, {"mass", entry.mass}});
  }
  if (ordering) doc["ordering"] = *ordering;
  return doc.dump(indent) + "\n";
}

BasicProbabilityAssignment FrameDocument::to_bpa() const {
  FrameOfDiscernment frame = [&] {
    try {
      return FrameOfDiscernment(elements);
    } catch (const Error& e) {
      rethrow_at(e, "elements");
    }
  }();

  std::vector<MassEntry> entries;
  entries.reserve(focals.size());
  std::unordered_set<std::uint32_t> seen;
  for (std::size_t i = 0; i < focals.size(); ++i) {
    const std::string path = "focals[" + std::to_string(i) + "]";
    try {
      FocalElement focal(frame, focals[i].members);
      const double mass = parse_mass(focals[i].mass);
      if (!(mass > 0.0)) {
        throw Error(errc::nonpositive_mass,
                    "mass '" + focals[i].mass + "' must be positive");
      }
      if (!seen.insert(focal.mask()).second) {
        throw Error(errc::duplicate_focal,
                    "duplicate focal element " + focal.label(frame));
      }
      entries.push_back({focal, mass});
    } catch (const Error& e) {
      rethrow_at(e, path);
    }
  }
  return BasicProbabilityAssignment(std::move(frame), std::move(entries));
}

OrdinalAssignment FrameDocument::to_ordinal() const {
  if (!ordering) {
    throw Error(errc::schema_error, "document has no ordering");
  }
  return OrdinalAssignment::with_positions(to_bpa(), *ordering);
}

}  // namespace ordent
