#include <benchmark/benchmark.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "ordent/classic_entropies.hpp"
#include "ordent/document.hpp"
#include "ordent/permutation.hpp"

using namespace ordent;

namespace {

BasicProbabilityAssignment random_bpa(int focal_count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> names;
  for (int i = 0; i < 16; ++i) names.push_back("P" + std::to_string(i + 1));

  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask < (1u << 16); ++mask) {
    if (std::popcount(mask) <= 3) masks.push_back(mask);
  }
  std::shuffle(masks.begin(), masks.end(), rng);

  std::uniform_real_distribution<double> mass_dist(0.05, 1.0);
  std::vector<double> raw(static_cast<std::size_t>(focal_count));
  double sum = 0.0;
  for (double& m : raw) {
    m = mass_dist(rng);
    sum += m;
  }
  std::vector<MassEntry> entries;
  for (int i = 0; i < focal_count; ++i) {
    entries.push_back(
        {FocalElement::from_mask(masks[static_cast<std::size_t>(i)]), raw[i] / sum});
  }
  return BasicProbabilityAssignment(FrameOfDiscernment(names), entries);
}

void BM_ComputeOrdinalEntropy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BasicProbabilityAssignment bpa = random_bpa(n, 17);
  std::vector<int> positions(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) positions[static_cast<std::size_t>(i)] = i + 1;
  OrdinalAssignment ordinal = OrdinalAssignment::with_positions(bpa, positions);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_ordinal_entropy(ordinal).inu());
  }
}
BENCHMARK(BM_ComputeOrdinalEntropy)->DenseRange(2, 10, 2);

void BM_AverageInu(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BasicProbabilityAssignment bpa = random_bpa(n, 19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(average_inu(bpa).mean_inu());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_AverageInu)->DenseRange(3, 8, 1)->Unit(benchmark::kMicrosecond);

void BM_DengEntropy(benchmark::State& state) {
  BasicProbabilityAssignment bpa =
      random_bpa(static_cast<int>(state.range(0)), 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(deng_entropy(bpa).value());
  }
}
BENCHMARK(BM_DengEntropy)->Arg(8)->Arg(64)->Arg(512);

void BM_ParseDocument(benchmark::State& state) {
  const std::string text = R"({
    "elements": ["P1", "P2", "P3"],
    "focals": [
      {"members": ["P1"], "mass": "4/13"},
      {"members": ["P2"], "mass": "3/13"},
      {"members": ["P3"], "mass": "5/13"},
      {"members": ["P1", "P2"], "mass": "1/13"}
    ],
    "ordering": [1, 2, 3, 4]
  })";
  for (auto _ : state) {
    benchmark::DoNotOptimize(FrameDocument::from_json(text).to_ordinal().slot_count());
  }
}
BENCHMARK(BM_ParseDocument);

}  // namespace

BENCHMARK_MAIN();
