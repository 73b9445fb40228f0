#include <benchmark/benchmark.h>

#include <random>

#include "gwht/analysis.hpp"

namespace {

using namespace gwht;

std::vector<BigInt> random_values(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-1000, 1000);
  std::vector<BigInt> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

LinearCode random_code(const Field& f, std::size_t n, std::size_t r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  for (;;) {
    Matrix h(r, n);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t c = 0; c < n; ++c) h(i, c) = Element{d(rng)};
    }
    bool zero_column = false;
    for (std::size_t c = 0; c < n; ++c) zero_column = zero_column || is_zero(h.column(c));
    if (!zero_column && rank(f, h) == r) return LinearCode::from_parity(f, h);
  }
}

// Arguments: q, s.
void BM_ReducedTransform(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  const auto table = build_table(f, static_cast<unsigned>(state.range(1)));
  const ReducedSpectrum h(table, 1, random_values(table->size(), 1));
  (void)reduced_transform(h);  // materialize N(M_k) outside the timed loop
  for (auto _ : state) benchmark::DoNotOptimize(reduced_transform(h));
  state.counters["theta"] = static_cast<double>(table->size());
}
BENCHMARK(BM_ReducedTransform)->Args({3, 4})->Args({3, 6})->Args({3, 8})->Args({5, 4})->Args({9, 3})->Args({4, 5});

void BM_FullTransform(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  const unsigned s = static_cast<unsigned>(state.range(1));
  const FullSpectrum h = FullSpectrum::from_integers(f, s, random_values(domain_size(f, s), 2));
  for (auto _ : state) benchmark::DoNotOptimize(transform_full(h));
  state.counters["q^s"] = static_cast<double>(h.size());
}
BENCHMARK(BM_FullTransform)->Args({3, 4})->Args({3, 6})->Args({3, 8})->Args({5, 4})->Args({9, 3})->Args({4, 5});

void BM_TableBuild(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(f, static_cast<unsigned>(state.range(1))));
}
BENCHMARK(BM_TableBuild)->Args({3, 6})->Args({3, 9})->Args({9, 4});

// Arguments: q, n, n - k.
void BM_CoveringRadiusTransform(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  const LinearCode code = random_code(f, static_cast<std::size_t>(state.range(1)),
                                      static_cast<std::size_t>(state.range(2)), 3);
  RadiusOptions options;
  options.table = build_table(f, static_cast<unsigned>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(covering_radius_transform(code, options));
}
BENCHMARK(BM_CoveringRadiusTransform)->Args({3, 12, 6})->Args({3, 24, 9})->Args({5, 12, 5})->Args({4, 12, 5})
    ->Unit(benchmark::kMillisecond);

void BM_CoveringRadiusOracle(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  const LinearCode code = random_code(f, static_cast<std::size_t>(state.range(1)),
                                      static_cast<std::size_t>(state.range(2)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_coset_profile(code));
}
BENCHMARK(BM_CoveringRadiusOracle)->Args({3, 12, 6})->Args({3, 24, 9})->Args({5, 12, 5})->Args({4, 12, 5})
    ->Unit(benchmark::kMillisecond);

void BM_WeightDistribution(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  const std::size_t k = static_cast<std::size_t>(state.range(2));
  const LinearCode code = LinearCode::from_generator(
      f, random_code(f, static_cast<std::size_t>(state.range(1)), k, 4).parity_matrix());
  const auto table = build_table(f, static_cast<unsigned>(k));
  const CharacteristicVector chi = characteristic_vector(code, table);
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(chi));
}
BENCHMARK(BM_WeightDistribution)->Args({3, 14, 6})->Args({9, 14, 4})->Args({2, 30, 12});

}  // namespace

BENCHMARK_MAIN();
