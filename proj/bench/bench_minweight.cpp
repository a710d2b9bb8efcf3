// Minimum-weight scan: OpenMP kernel vs the serial reference enumerator.
// Run with --benchmark_time_unit=ms for readable numbers.

#include <benchmark/benchmark.h>

#include <random>

#include "qecc/code.hpp"
#include "qecc/reference.hpp"

using namespace qecc;

namespace {

LinearCode random_code(int q, int m, int n, int k, std::uint64_t seed) {
  FieldPtr f = Field::make(q, m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> elem(0, f->q() - 1);
  for (;;) {
    std::vector<std::vector<int>> rows(k, std::vector<int>(n));
    for (auto& r : rows)
      for (int& v : r) v = elem(rng);
    LinearCode c = LinearCode::from_generator(CodeMatrix::from_rows(f, rows));
    if (c.dim() == k) return c;
  }
}

const LinearCode& binary_code() {
  static LinearCode c = random_code(2, 1, 24, 16, 99);  // 2^16 codewords
  return c;
}

const LinearCode& quaternary_code() {
  static LinearCode c = random_code(2, 2, 14, 8, 101);  // 4^8 codewords
  return c;
}

void BM_MinWeightParallel_GF2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(min_weight(binary_code()));
}

void BM_MinWeightSerialRef_GF2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ref::min_weight_serial(binary_code()));
}

void BM_MinWeightParallel_GF4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(min_weight(quaternary_code()));
}

void BM_MinWeightSerialRef_GF4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ref::min_weight_serial(quaternary_code()));
}

}  // namespace

BENCHMARK(BM_MinWeightParallel_GF2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeightSerialRef_GF2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeightParallel_GF4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeightSerialRef_GF4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
