#include <benchmark/benchmark.h>

#include "pfsum/identities.hpp"
#include "pfsum/product_engine.hpp"
#include "pfsum/series.hpp"
#include "pfsum/special_functions.hpp"

namespace {

using namespace pfsum;

Precision at_digits(benchmark::State& state) {
  Precision p;
  p.digits = static_cast<int>(state.range(0));
  p.tol = 1e-20;
  return p;
}

void BM_LnGamma(benchmark::State& state) {
  const Precision prec = at_digits(state);
  PrecisionScope scope(prec);
  const BigComplex z(BigReal("0.3"), BigReal("1.7"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ln_gamma(z));
  }
}
BENCHMARK(BM_LnGamma)->Arg(30)->Arg(50)->Arg(100);

void BM_HurwitzZeta(benchmark::State& state) {
  const Precision prec = at_digits(state);
  const BigComplex a(BigReal("0.75"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hurwitz_zeta(3, a, prec));
  }
}
BENCHMARK(BM_HurwitzZeta)->Arg(30)->Arg(50)->Arg(100);

void BM_PfsCoeff(benchmark::State& state) {
  Precision prec;
  const auto spec = SequenceSpec::hurwitz(BigComplex(BigReal("0.75")), 2);
  const int J = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfs_coeff(spec, J, prec));
  }
}
BENCHMARK(BM_PfsCoeff)->Arg(0)->Arg(2)->Arg(4)->Arg(8);

void BM_TaylorCoeffs(benchmark::State& state) {
  Precision prec;
  const auto spec = SequenceSpec::hurwitz(BigComplex(BigReal("0.75")), 2);
  const int J = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(taylor_coeffs_inverse(spec, J, prec));
  }
}
BENCHMARK(BM_TaylorCoeffs)->Arg(4)->Arg(8)->Arg(16);

void BM_EulerAlternating(benchmark::State& state) {
  Precision prec;
  // sum (-1)^k / (k+1) = log 2
  const TermFn term = [](std::int64_t k) {
    const BigComplex t = BigComplex(BigReal(1) / BigReal(k + 1));
    return k % 2 == 0 ? t : -t;
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum_series(term, SummationStrategy::EulerTransform, prec));
  }
}
BENCHMARK(BM_EulerAlternating);

void BM_RichardsonZeta2(benchmark::State& state) {
  Precision prec;
  const TermFn term = [](std::int64_t k) {
    const BigReal n(k + 1);
    return BigComplex(BigReal(1) / (n * n));
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum_series(term, SummationStrategy::Richardson, prec));
  }
}
BENCHMARK(BM_RichardsonZeta2);

void BM_VerifySuite(benchmark::State& state) {
  Precision prec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_suite(catalog_ids(), 7, prec));
  }
}
BENCHMARK(BM_VerifySuite)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
