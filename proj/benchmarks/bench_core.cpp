#include <benchmark/benchmark.h>

#include "liecurv/catalog.hpp"
#include "liecurv/lie_algebra.hpp"
#include "liecurv/obstruction.hpp"
#include "liecurv/polynomial.hpp"
#include "liecurv/scalar.hpp"
#include "liecurv/wedge.hpp"

namespace {

using namespace liecurv;

void BM_scalar_invert(benchmark::State& state) {
  Scalar a = Scalar(Rational(3, 7)) + Scalar(Rational(2, 5), 2) + Scalar(Rational(-1, 3), 3) +
             Scalar(Rational(5, 11), 6);
  for (auto _ : state) {
    Scalar inv = a.invert();
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_scalar_invert);

void BM_scalar_multiply(benchmark::State& state) {
  Scalar a = Scalar(Rational(3, 7)) + Scalar(Rational(2, 5), 2) + Scalar(Rational(-1, 3), 3);
  Scalar b = Scalar(Rational(1, 2)) + Scalar(Rational(4, 9), 5) + Scalar(Rational(7, 4), 30);
  for (auto _ : state) {
    Scalar c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_scalar_multiply);

void BM_curvature_data(benchmark::State& state) {
  MetricLieAlgebra alg = catalog_build("nikonorov5");
  for (auto _ : state) {
    CurvatureData data = curvature_data(alg);
    benchmark::DoNotOptimize(data);
  }
}
BENCHMARK(BM_curvature_data);

void BM_curvature_operator(benchmark::State& state) {
  MetricLieAlgebra alg = catalog_build("nikonorov5");
  for (auto _ : state) {
    CurvatureOperator op = curvature_operator(alg);
    benchmark::DoNotOptimize(op);
  }
}
BENCHMARK(BM_curvature_operator);

void BM_char_poly_10x10(benchmark::State& state) {
  MetricLieAlgebra alg = catalog_build("nikonorov5");
  CurvatureOperator op = curvature_operator(alg);
  for (auto _ : state) {
    Polynomial f = char_poly(op.Q);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_char_poly_10x10);

void BM_spectrum_10x10(benchmark::State& state) {
  MetricLieAlgebra alg = catalog_build("nikonorov5");
  CurvatureOperator op = curvature_operator(alg);
  for (auto _ : state) {
    std::vector<SpectrumEntry> spec = numeric_spectrum(op.Q);
    benchmark::DoNotOptimize(spec);
  }
}
BENCHMARK(BM_spectrum_10x10);

void BM_paired_eigenvalue_test(benchmark::State& state) {
  MetricLieAlgebra alg = catalog_build("nikonorov4");
  for (auto _ : state) {
    ObstructionReport rep = paired_eigenvalue_test(alg);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_paired_eigenvalue_test);

}  // namespace

BENCHMARK_MAIN();
