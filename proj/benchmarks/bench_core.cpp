#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "tcl/filtration.hpp"

using namespace tcl;

namespace {

HsopIdeal parameters(const HypersurfaceRing& R, unsigned e) {
  std::vector<std::string> gens;
  for (std::size_t i = 1; i <= R.krull_dimension(); ++i)
    gens.push_back("x" + std::to_string(i) + (e > 1 ? "^" + std::to_string(e) : ""));
  return validate_hsop(RIdeal::parse(R, gens));
}

// Basis of (J^n + m^k) together with the Fermat relation, from scratch.
void BM_BuchbergerClosure(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  auto R = HypersurfaceRing::fermat(7, 5, 2);
  auto J = parameters(R, 2);
  auto closure = closed_form_tight_closure(J, n).ideal;
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(closure.lifted()));
}
BENCHMARK(BM_BuchbergerClosure)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_BuchbergerDense(benchmark::State& state) {
  PrimeChar ch(11);
  std::vector<std::string> vars{"x0", "x1", "x2"};
  auto R = HypersurfaceRing::polynomial_ring(11, vars);
  IdealGens g(ch, 3,
              {R.parse("x0^2 + 3*x1*x2 + x2^2"), R.parse("x1^2 + 5*x0*x2 + 2*x0*x1"),
               R.parse("x2^3 + x0*x1*x2 + 7*x0^3")});
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(g));
}
BENCHMARK(BM_BuchbergerDense)->Unit(benchmark::kMicrosecond);

// Degree slice of J^n at the top degree of the closure, scanning every q <= p^3.
void BM_FrobeniusSlice(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  auto R = HypersurfaceRing::fermat(7, 3, 2);
  auto J = parameters(R, 1);
  auto Jn = ideal_power(J.ideal(), n);
  auto c = default_test_element(R);
  const std::uint64_t t = n;  // degree n: slice strictly larger than (J^n)_t
  for (auto _ : state) benchmark::DoNotOptimize(tight_closure_degree_slice(Jn, t, c, 343, false));
}
BENCHMARK(BM_FrobeniusSlice)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_TightFiltrationReport(benchmark::State& state) {
  auto R = HypersurfaceRing::fermat(11, 4, 2);
  for (auto _ : state) {
    TightFiltration tf(parameters(R, 1));
    benchmark::DoNotOptimize(tf.fit_coefficients());
    benchmark::DoNotOptimize(tf.vv_check(6));
  }
}
BENCHMARK(BM_TightFiltrationReport)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
