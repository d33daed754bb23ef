#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ordent/classic_entropies.hpp"
#include "ordent/document.hpp"
#include "ordent/permutation.hpp"
#include "ordent/render.hpp"
#include "ordent/reproduce.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ordent::Error(ordent::errc::parse_error, "cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ordent::Error(ordent::errc::parse_error, "cannot write '" + path + "'");
  }
  return out;
}

int run_compute(const std::string& input, const std::string& csv, int precision) {
  const ordent::FrameDocument doc = ordent::FrameDocument::from_json(read_file(input));
  if (!doc.has_ordering()) {
    throw ordent::Error(ordent::errc::schema_error,
                        "document has no ordering; use permute-average for unordered "
                        "assignments");
  }
  const ordent::BasicProbabilityAssignment bpa = doc.to_bpa();
  const ordent::OrdinalAssignment ordinal = doc.to_ordinal();
  const ordent::OrdinalEntropyReport report = ordent::compute_ordinal_entropy(ordinal);
  const double deng = ordent::deng_entropy(bpa).value();
  const double dp = ordent::dp_hartley_entropy(bpa).value();

  ordent::render_compute_text(std::cout, ordinal, report, deng, dp, precision);
  if (!csv.empty()) {
    std::ofstream out = open_output(csv);
    ordent::render_compute_csv(out, ordinal, report, deng, dp);
  }
  return 0;
}

int run_permute_average(const std::string& input, const std::string& csv, int precision) {
  const ordent::FrameDocument doc = ordent::FrameDocument::from_json(read_file(input));
  const ordent::BasicProbabilityAssignment bpa = doc.to_bpa();
  const ordent::PermutationReport report = ordent::average_inu(bpa);

  ordent::render_permutation_text(std::cout, bpa, report, precision);
  if (!csv.empty()) {
    std::ofstream out = open_output(csv);
    ordent::render_permutation_csv(out, bpa, report);
  }
  return 0;
}

int run_reproduce(const std::string& selector, const std::string& csv, int precision) {
  const std::vector<int> tables = ordent::parse_table_selector(selector);
  std::vector<ordent::TableReproduction> reproduced;
  for (int number : tables) {
    reproduced.push_back(ordent::reproduce_table(number));
  }

  bool first = true;
  for (const ordent::TableReproduction& table : reproduced) {
    if (!first) std::cout << '\n';
    first = false;
    ordent::render_reproduction_text(std::cout, table, precision);
  }
  if (!csv.empty()) {
    std::ofstream out = open_output(csv);
    for (std::size_t i = 0; i < reproduced.size(); ++i) {
      if (i == 0) {
        ordent::render_reproduction_csv(out, reproduced[i]);
      } else {
        // Header only once; append the remaining tables' cell rows.
        std::ostringstream rows;
        ordent::render_reproduction_csv(rows, reproduced[i]);
        const std::string text = rows.str();
        out << text.substr(text.find('\n') + 1);
      }
    }
  }
  // Errata are findings, not failures.
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal relative belief entropy for frames of discernment"};
  app.require_subcommand(1);

  std::string input;
  std::string csv;
  std::string table = "all";
  int precision = 4;

  CLI::App* compute =
      app.add_subcommand("compute", "evaluate one ordered assignment end to end");
  compute->add_option("--input", input, "frame document (JSON)")->required();
  compute->add_option("--csv", csv, "write a full-precision CSV record");
  compute->add_option("--precision", precision, "display decimals (default 4)");

  CLI::App* permute = app.add_subcommand(
      "permute-average", "average INU over every ordering of an unordered assignment");
  permute->add_option("--input", input, "frame document (JSON)")->required();
  permute->add_option("--csv", csv, "write one CSV record per ordering plus the mean");
  permute->add_option("--precision", precision, "display decimals (default 4)");

  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "recompute bundled reference tables and report discrepancies");
  reproduce->add_option("--table", table, "1..5 or 'all' (default)");
  reproduce->add_option("--csv", csv, "write every cell as a CSV row");
  reproduce->add_option("--precision", precision, "display decimals (default 4)");

  try {
    app.parse(argc, argv);
    if (compute->parsed()) return run_compute(input, csv, precision);
    if (permute->parsed()) return run_permute_average(input, csv, precision);
    return run_reproduce(table, csv, precision);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ordent::Error& e) {
    std::cerr << "error [" << ordent::errc_name(e.code()) << "]: " << e.what() << '\n';
    return e.code() == ordent::errc::internal ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
