#include <benchmark/benchmark.h>

#include "pqrs/fock.hpp"
#include "pqrs/ops.hpp"
#include "pqrs/poly.hpp"
#include "pqrs/pqcore.hpp"

namespace {

void BM_BinomialQuotient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqrs::pqBinomial(n, n / 2));
  }
}
BENCHMARK(BM_BinomialQuotient)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

void BM_BinomialPascal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqrs::pqBinomialPascal(n, n / 2));
  }
}
BENCHMARK(BM_BinomialPascal)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

void BM_DivExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const pqrs::Scalar num = pqrs::pqFactorial(n);
  const pqrs::Scalar den = pqrs::pqFactorial(n / 2) * pqrs::pqFactorial(n - n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(num.divExact(den));
  }
}
BENCHMARK(BM_DivExact)->Arg(8)->Arg(12)->Arg(16);

void BM_FamilyBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqrs::pqRsPoly(n));
  }
}
BENCHMARK(BM_FamilyBuild)->Arg(6)->Arg(10)->Arg(14);

void BM_LadderSuite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqrs::checkLadderSuite(n));
  }
}
BENCHMARK(BM_LadderSuite)->Arg(4)->Arg(8)->Arg(12);

void BM_OscillatorSuite(benchmark::State& state) {
  const int nmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqrs::checkPqOscillator(nmax));
  }
}
BENCHMARK(BM_OscillatorSuite)->Arg(6)->Arg(12)->Arg(20);

void BM_TwoModeBilinears(benchmark::State& state) {
  const int nmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqrs::checkJsUqSl2(nmax));
  }
}
BENCHMARK(BM_TwoModeBilinears)->Arg(4)->Arg(6)->Arg(8);

void BM_HermiteSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pqrs::hermiteEval(n, 0.7, pqrs::Rational(5, 2), pqrs::Rational(1, 3)));
  }
}
BENCHMARK(BM_HermiteSweep)->Arg(4)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
