#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ordent/ordinal.hpp"
#include "ordent/permutation.hpp"

namespace ordent {

// Fixed-point formatting for human tables (4 decimals by default).
std::string format_fixed(double value, int precision);

// Full-fidelity formatting for CSV (round-trips the double exactly).
std::string format_full(double value);

// Pads each column of a string grid to its widest cell and streams it; the
// first `left_columns` columns are left-aligned, the rest right-aligned.
void write_aligned_table(std::ostream& out,
                         const std::vector<std::vector<std::string>>& rows,
                         std::size_t left_columns = 1);

void render_compute_text(std::ostream& out, const OrdinalAssignment& ordinal,
                         const OrdinalEntropyReport& report, double deng, double dp,
                         int precision);

// One wide CSV record: sequence, inu, deng, dp, iu_*, value_*, weight_*, u_j_b.
void render_compute_csv(std::ostream& out, const OrdinalAssignment& ordinal,
                        const OrdinalEntropyReport& report, double deng, double dp);

void render_permutation_text(std::ostream& out, const BasicProbabilityAssignment& bpa,
                             const PermutationReport& report, int precision);

// One record per ordering plus a trailing MEAN record.
void render_permutation_csv(std::ostream& out, const BasicProbabilityAssignment& bpa,
                            const PermutationReport& report);

}  // namespace ordent
