#include "ordent/render.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <vector>

namespace ordent {

void write_aligned_table(std::ostream& out,
                         const std::vector<std::vector<std::string>>& rows,
                         std::size_t left_columns) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) line += "  ";
      const std::size_t pad = widths[c] - row[c].size();
      if (c < left_columns) {
        line += row[c] + std::string(pad, ' ');
      } else {
        line += std::string(pad, ' ') + row[c];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

namespace {

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string join_elements(const FrameOfDiscernment& frame) {
  std::string out;
  for (const std::string& name : frame.elements()) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

std::string sequence_from_positions(const BasicProbabilityAssignment& bpa,
                                    std::span<const std::uint8_t> positions) {
  std::vector<std::string> by_position(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    by_position[positions[i] - 1] = bpa.entries()[i].focal.label(bpa.frame());
  }
  std::string out;
  for (const std::string& label : by_position) {
    if (!out.empty()) out += " > ";
    out += label;
  }
  return out;
}

}  // namespace

std::string format_fixed(double value, int precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", precision, value);
  return buffer;
}

std::string format_full(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void render_compute_text(std::ostream& out, const OrdinalAssignment& ordinal,
                         const OrdinalEntropyReport& report, double deng, double dp,
                         int precision) {
  const int n = static_cast<int>(ordinal.slot_count());
  out << "frame: " << join_elements(ordinal.frame()) << '\n';
  out << "sequence: " << ordinal.sequence_label() << "\n\n";

  std::vector<std::vector<std::string>> grid;
  grid.push_back({"pos", "focal", "mass", "weight", "value"});
  for (int j = 1; j <= n; ++j) {
    const OrdinalSlot& slot = ordinal.at_position(j);
    grid.push_back({std::to_string(j), slot.focal.label(ordinal.frame()),
                    format_fixed(slot.mass, precision),
                    std::to_string(report.values().weights[j - 1]),
                    format_fixed(report.values().values[j - 1], precision)});
  }
  write_aligned_table(out, grid, 2);

  if (n > 1) {
    out << "\npairwise U(j,b):\n";
    grid.clear();
    std::vector<std::string> header{"j\\b"};
    for (int b = 2; b <= n; ++b) header.push_back(std::to_string(b));
    grid.push_back(header);
    for (int j = 1; j < n; ++j) {
      std::vector<std::string> row{std::to_string(j)};
      for (int b = 2; b <= n; ++b) {
        row.push_back(b > j ? format_fixed(report.pairwise(j, b), precision) : "");
      }
      grid.push_back(row);
    }
    write_aligned_table(out, grid);
  }

  out << "\nIU: ";
  for (int j = 1; j <= n; ++j) {
    if (j > 1) out << ' ';
    out << format_fixed(report.iu()[j - 1], precision);
  }
  out << '\n';
  out << "INU: " << format_fixed(report.inu(), precision) << '\n';
  out << "Deng entropy: " << format_fixed(deng, precision) << '\n';
  out << "Dubois & Prade weighted Hartley entropy: " << format_fixed(dp, precision) << '\n';
}

void render_compute_csv(std::ostream& out, const OrdinalAssignment& ordinal,
                        const OrdinalEntropyReport& report, double deng, double dp) {
  const int n = static_cast<int>(ordinal.slot_count());
  out << "sequence,inu,deng,dp";
  for (int j = 1; j <= n; ++j) out << ",iu_" << j;
  for (int j = 1; j <= n; ++j) out << ",value_" << j;
  for (int j = 1; j <= n; ++j) out << ",weight_" << j;
  for (int j = 1; j < n; ++j) {
    for (int b = j + 1; b <= n; ++b) out << ",u_" << j << '_' << b;
  }
  out << '\n';

  out << quote_csv(ordinal.sequence_label());
  out << ',' << format_full(report.inu()) << ',' << format_full(deng) << ','
      << format_full(dp);
  for (int j = 1; j <= n; ++j) out << ',' << format_full(report.iu()[j - 1]);
  for (int j = 1; j <= n; ++j) out << ',' << format_full(report.values().values[j - 1]);
  for (int j = 1; j <= n; ++j) out << ',' << report.values().weights[j - 1];
  for (int j = 1; j < n; ++j) {
    for (int b = j + 1; b <= n; ++b) out << ',' << format_full(report.pairwise(j, b));
  }
  out << '\n';
}

void render_permutation_text(std::ostream& out, const BasicProbabilityAssignment& bpa,
                             const PermutationReport& report, int precision) {
  out << "frame: " << join_elements(bpa.frame()) << '\n';
  out << report.slot_count() << " focal elements, " << report.count() << " orderings\n\n";

  // Alignment buffers every row; past a few thousand orderings just stream.
  if (report.count() <= 5000) {
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"#", "sequence", "INU"});
    for (std::size_t i = 0; i < report.count(); ++i) {
      grid.push_back({std::to_string(i + 1),
                      sequence_from_positions(bpa, report.positions(i)),
                      format_fixed(report.inu(i), precision)});
    }
    grid.push_back({"", "mean", format_fixed(report.mean_inu(), precision)});
    write_aligned_table(out, grid, 2);
    return;
  }
  for (std::size_t i = 0; i < report.count(); ++i) {
    out << (i + 1) << '\t' << sequence_from_positions(bpa, report.positions(i)) << '\t'
        << format_fixed(report.inu(i), precision) << '\n';
  }
  out << "mean\t\t" << format_fixed(report.mean_inu(), precision) << '\n';
}

void render_permutation_csv(std::ostream& out, const BasicProbabilityAssignment& bpa,
                            const PermutationReport& report) {
  out << "ordering,sequence,inu\n";
  for (std::size_t i = 0; i < report.count(); ++i) {
    out << (i + 1) << ',' << quote_csv(sequence_from_positions(bpa, report.positions(i)))
        << ',' << format_full(report.inu(i)) << '\n';
  }
  out << "mean,," << format_full(report.mean_inu()) << '\n';
}

}  // namespace ordent
