// OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include "ebelyi/cli.hpp"
#include "ebelyi/lattice.hpp"
#include "ebelyi/triples.hpp"

using namespace eb;

namespace {

void BM_Enumerate(benchmark::State& st) {
  int d = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_triples(d, Case::k333));
}

void BM_EnumerateSerial(benchmark::State& st) {
  int d = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_triples_serial(d, Case::k333));
}

std::vector<BigComplex> grid(mpfr_prec_t p, int n) {
  std::vector<BigComplex> zs;
  for (int k = 0; k < n; ++k)
    zs.emplace_back(BigFloat(0.013 * (k + 1), p), BigFloat(0.007 * (k + 3), p));
  return zs;
}

ScaledLattice square_lattice(mpfr_prec_t p) {
  return scale_to_model(BigComplex(1L, p), BigComplex(BigFloat(0L, p), BigFloat(1L, p)), true, p);
}

void BM_WpBatch(benchmark::State& st) {
  const mpfr_prec_t p = st.range(0);
  auto L = square_lattice(p);
  auto zs = grid(p, 256);
  for (auto _ : st) benchmark::DoNotOptimize(wp_batch(zs, L));
}

void BM_WpBatchSerial(benchmark::State& st) {
  const mpfr_prec_t p = st.range(0);
  auto L = square_lattice(p);
  auto zs = grid(p, 256);
  for (auto _ : st) benchmark::DoNotOptimize(wp_batch_serial(zs, L));
}

std::vector<std::pair<PermutationTriple, Case>> jobs(int up_to) {
  std::vector<std::pair<PermutationTriple, Case>> out;
  for (Case c : {Case::k333, Case::k236, Case::k244})
    for (int d = 1; d <= up_to; ++d)
      for (const auto& t : enumerate_triples(d, c)) out.push_back({t, c});
  return out;
}

void BM_RunBatch(benchmark::State& st) {
  auto w = jobs(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(run_batch(w, RecordOptions{}));
}

void BM_RunBatchSerial(benchmark::State& st) {
  auto w = jobs(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(run_batch_serial(w, RecordOptions{}));
}

}  // namespace

BENCHMARK(BM_Enumerate)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WpBatch)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WpBatchSerial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunBatch)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunBatchSerial)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
