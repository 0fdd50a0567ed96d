// Serial against OpenMP versions of the Gram and matrix product kernels.
#include <benchmark/benchmark.h>

#include "cqg/datum_io.hpp"
#include "cqg/kernels.hpp"

using namespace cqg;

namespace {

std::vector<Word> gram_words(int h) {
  Weight nu{h / 2 + h % 2, h / 2};
  return words_of_weight(nu);
}

FieldMatrix sample_matrix(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = RationalFn(LaurentPoly(GaussianRational(static_cast<long>((r * 7 + c * 3) % 5) - 2), static_cast<int>(c % 3) - 1),
                           LaurentPoly(1) + LaurentPoly::v().shifted(static_cast<int>(r % 2)));
  return m;
}

void BM_GramSerial(benchmark::State& st) {
  Datum D = catalog_datum("osp(1|4)");
  auto words = gram_words(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(gram_matrix_serial(D.cartan(), words));
}

void BM_GramParallel(benchmark::State& st) {
  Datum D = catalog_datum("osp(1|4)");
  auto words = gram_words(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(gram_matrix_parallel(D.cartan(), words));
}

void BM_MatmulSerial(benchmark::State& st) {
  auto a = sample_matrix(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(matmul_serial(a, a));
}

void BM_MatmulParallel(benchmark::State& st) {
  auto a = sample_matrix(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(matmul_parallel(a, a));
}

}  // namespace

BENCHMARK(BM_GramSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatmulSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatmulParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
