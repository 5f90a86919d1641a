#include <benchmark/benchmark.h>

#include <random>

#include "nclab/gasket.hpp"
#include "nclab/matrix.hpp"
#include "nclab/spectrum.hpp"
#include "nclab/torus.hpp"
#include "nclab/words.hpp"

using namespace nclab;

static void BM_Kron(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ComplexMatrix a = ComplexMatrix::Random(n, n), b = ComplexMatrix::Random(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron)->Arg(8)->Arg(16)->Arg(32);

static void BM_OperatorNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ComplexMatrix a = ComplexMatrix::Random(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(operator_norm(a));
}
BENCHMARK(BM_OperatorNorm)->Arg(64)->Arg(128)->Arg(256);

static void BM_TensorSpectrum(benchmark::State& state) {
  auto s1 = torus_spectrum(2, static_cast<int>(state.range(0))).compressed();
  auto s2 = nat_spectrum(256).compressed();
  for (auto _ : state) benchmark::DoNotOptimize(tensor_spectrum(s1, s2));
}
BENCHMARK(BM_TensorSpectrum)->Arg(16)->Arg(32);

static void BM_DimensionFit(benchmark::State& state) {
  auto s = torus_spectrum(2, 64);
  auto grid = log_grid(8 * M_PI, 64 * M_PI, 12);
  for (auto _ : state) benchmark::DoNotOptimize(dimension_fit(s, grid));
}
BENCHMARK(BM_DimensionFit);

static void BM_EnumerateEdges(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_edges(1, m));
}
BENCHMARK(BM_EnumerateEdges)->Arg(4)->Arg(6)->Arg(8);

static void BM_NormalizeWord(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> let(0, 3);
  std::vector<RawWord> words(64);
  for (auto& w : words)
    for (int i = 0; i < state.range(0); ++i) w.letters.push_back(static_cast<Letter>(let(rng)));
  const Rational theta{1, 5};
  for (auto _ : state)
    for (const auto& w : words) benchmark::DoNotOptimize(normalize_word(w, theta));
}
BENCHMARK(BM_NormalizeWord)->Arg(8)->Arg(16)->Arg(32);

static void BM_SolenoidSpectrum(benchmark::State& state) {
  auto cm = make_covering(Eigen::MatrixXi(2 * Eigen::MatrixXi::Identity(2, 2)));
  for (auto _ : state)
    benchmark::DoNotOptimize(solenoid_spectrum(cm, static_cast<int>(state.range(0)), 8));
}
BENCHMARK(BM_SolenoidSpectrum)->Arg(1)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
