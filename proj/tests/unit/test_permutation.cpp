#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "frozen_values.hpp"
#include "ordent/permutation.hpp"
#include "random_bpa.hpp"
#include "reference_math.hpp"

using namespace ordent;

namespace {

BasicProbabilityAssignment singleton_bpa(std::vector<double> masses) {
  std::vector<std::string> names;
  std::vector<MassEntry> entries;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    names.push_back("P" + std::to_string(i + 1));
    entries.push_back({FocalElement::from_mask(1u << i), masses[i]});
  }
  return BasicProbabilityAssignment(FrameOfDiscernment(names), entries);
}

std::vector<refmath::Slot> slots_of(const BasicProbabilityAssignment& bpa) {
  std::vector<refmath::Slot> out;
  for (const MassEntry& e : bpa.entries()) out.push_back({e.mass, e.focal.cardinality()});
  return out;
}

}  // namespace

TEST_CASE("ordering enumeration is lexicographic and exhaustive") {
  BasicProbabilityAssignment bpa = singleton_bpa({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  std::vector<OrdinalAssignment> orderings = enumerate_orderings(bpa);
  REQUIRE(orderings.size() == 6);

  // First ordering is the identity, last one is fully reversed.
  CHECK(orderings.front().sequence_label() == "P1 > P2 > P3");
  CHECK(orderings.back().sequence_label() == "P3 > P2 > P1");

  std::vector<std::string> labels;
  for (const OrdinalAssignment& ordering : orderings) {
    labels.push_back(ordering.sequence_label());
  }
  std::vector<std::string> unique_labels = labels;
  std::sort(unique_labels.begin(), unique_labels.end());
  unique_labels.erase(std::unique(unique_labels.begin(), unique_labels.end()),
                      unique_labels.end());
  CHECK(unique_labels.size() == 6);

  CHECK(enumerate_orderings(singleton_bpa({1.0})).size() == 1);

  BasicProbabilityAssignment four =
      singleton_bpa({0.25, 0.25, 0.25, 0.25});
  CHECK(enumerate_orderings(four).size() == 24);
}

TEST_CASE("enumeration cap") {
  std::vector<std::string> names;
  std::vector<MassEntry> entries;
  for (int i = 0; i < 11; ++i) {
    names.push_back("P" + std::to_string(i + 1));
    entries.push_back({FocalElement::from_mask(1u << i), 1.0 / 11.0});
  }
  BasicProbabilityAssignment bpa(FrameOfDiscernment(names), entries);
  CHECK_THROWS_AS(OrderingEnumerator{bpa}, Error);
  try {
    (void)average_inu(bpa);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_many_focal_elements);
  }
}

TEST_CASE("ordering average against frozen references") {
  SUBCASE("one-sixth/one-half/one-third masses") {
    PermutationReport report = average_inu(singleton_bpa({1.0 / 6.0, 0.5, 1.0 / 3.0}));
    REQUIRE(report.count() == 6);
    CHECK(report.mean_inu() == doctest::Approx(frozen::case5_mean_inu).epsilon(1e-14));
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(report.inu(i) == doctest::Approx(frozen::case5_inu_lex[i]).epsilon(1e-14));
    }
    // Position tuples come back in lexicographic order.
    CHECK(report.positions(0)[0] == 1);
    CHECK(report.positions(0)[1] == 2);
    CHECK(report.positions(5)[0] == 3);
    CHECK(report.positions(5)[1] == 2);
    CHECK(report.positions(5)[2] == 1);
    CHECK_THROWS_AS(report.positions(6), Error);
  }

  SUBCASE("single focal element") {
    PermutationReport report = average_inu(singleton_bpa({1.0}));
    CHECK(report.count() == 1);
    CHECK(report.mean_inu() == 0.0);
    CHECK(report.inu(0) == 0.0);
  }

  SUBCASE("quarter/sixth/seven-twelfths masses") {
    PermutationReport report =
        average_inu(singleton_bpa({0.25, 1.0 / 6.0, 7.0 / 12.0}));
    CHECK(report.mean_inu() == doctest::Approx(frozen::table2_mean_inu).epsilon(1e-14));
    CHECK(std::abs(report.mean_inu() - 2.3601) <= 1e-3);
  }
}

TEST_CASE("mean stays inside the per-ordering range and survives relabeling") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    BasicProbabilityAssignment bpa = testgen::random_bpa(rng, 5);
    PermutationReport report = average_inu(bpa);

    const auto [min_it, max_it] =
        std::minmax_element(report.inu_values().begin(), report.inu_values().end());
    CHECK(report.mean_inu() >= *min_it);
    CHECK(report.mean_inu() <= *max_it);

    std::vector<MassEntry> shuffled = bpa.entries();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    PermutationReport relabeled = average_inu({bpa.frame(), shuffled});
    CHECK(std::abs(report.mean_inu() - relabeled.mean_inu()) <= 1e-12);
  }
}

TEST_CASE("full symmetry collapses the spread") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    BasicProbabilityAssignment bpa = testgen::symmetric_bpa(rng);
    PermutationReport report = average_inu(bpa);
    for (double inu : report.inu_values()) {
      CHECK(std::abs(inu - report.inu(0)) <= 1e-12);
    }
    CHECK(std::abs(report.mean_inu() - report.inu(0)) <= 1e-12);
  }
}

TEST_CASE("per-ordering values equal independent recomputation") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    BasicProbabilityAssignment bpa = testgen::random_bpa(rng, 4);
    PermutationReport report = average_inu(bpa);

    for (std::size_t i = 0; i < report.count(); ++i) {
      std::vector<int> positions;
      for (std::uint8_t p : report.positions(i)) positions.push_back(p);

      // Through the public pipeline.
      OrdinalAssignment ordinal = OrdinalAssignment::with_positions(bpa, positions);
      CHECK(std::abs(report.inu(i) - compute_ordinal_entropy(ordinal).inu()) <= 1e-12);

      // And through the independent transcription.
      CHECK(std::abs(report.inu(i) -
                     refmath::inu_with_positions(slots_of(bpa), positions)) <= 1e-12);
    }
    CHECK(std::abs(report.mean_inu() - refmath::mean_inu(slots_of(bpa))) <= 1e-12);
  }
}
