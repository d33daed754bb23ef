#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ordent/frame.hpp"

namespace ordent {

// A recomputed cell is reported as errata when it deviates from the recorded
// reference value by more than this (references print 4 decimals).
inline constexpr double kReferenceTolerance = 1e-3;

// One documented divergence between a recorded reference value and the value
// the definitions actually produce. Findings, not failures.
struct ErrataRecord {
  std::string table_id;
  int row;             // 1-based row within the table
  std::string column;  // "iu1".."iu4", "inu", "deng", "dp", "proposed"
  double reference_value;
  double computed_value;
  double discrepancy;  // |reference - computed|
};

struct ReproducedCell {
  std::string column;
  double reference;
  double computed;
};

struct ReproducedRow {
  int row;
  std::string sequence;  // confirmation order, empty for single-row tables
  std::vector<ReproducedCell> cells;
};

struct TableReproduction {
  std::string id;
  std::string title;
  std::vector<ReproducedRow> rows;
  std::vector<ErrataRecord> errata;
};

// Recomputes one of the five bundled reference tables (1..5) from its input
// definition and compares every cell against the recorded values.
TableReproduction reproduce_table(int table_number);

// "1".."5" or "all"; throws parse_error otherwise.
std::vector<int> parse_table_selector(const std::string& selector);

void render_reproduction_text(std::ostream& out, const TableReproduction& table,
                              int precision);
void render_reproduction_csv(std::ostream& out, const TableReproduction& table);

}  // namespace ordent
