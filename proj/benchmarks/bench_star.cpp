#include <benchmark/benchmark.h>

#include "starprod/float_scalar.hpp"
#include "starprod/group.hpp"
#include "starprod/hyperbolic.hpp"
#include "starprod/rational.hpp"
#include "starprod/sampling.hpp"

using namespace starprod;

namespace {

template <ScalarBackend S>
void BM_star(benchmark::State& state) {
    SplitMix64 rng(42);
    auto n = static_cast<std::size_t>(state.range(0));
    Matrix<S> a = sample_matrix<S>(rng, n);
    Matrix<S> b = sample_matrix<S>(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(star(a, b));
}
BENCHMARK(BM_star<Rational>)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(BM_star<FloatScalar>)->Arg(2)->Arg(4)->Arg(8);

void BM_star_inverse(benchmark::State& state) {
    SplitMix64 rng(42);
    Matrix<Rational> a = sample_invertible<Rational>(rng);
    for (auto _ : state) benchmark::DoNotOptimize(star_inverse(a));
}
BENCHMARK(BM_star_inverse);

void BM_rho(benchmark::State& state) {
    SplitMix64 rng(42);
    Matrix<Rational> a = sample_invertible<Rational>(rng);
    for (auto _ : state) benchmark::DoNotOptimize(rho(a));
}
BENCHMARK(BM_rho);

}  // namespace

BENCHMARK_MAIN();
