// Microbenchmarks for the hot paths: image computation, the residue-set
// convolution underneath it, the three alpha routes, and factorization.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "polycong/arith.hpp"
#include "polycong/engine.hpp"
#include "polycong/oracle.hpp"
#include "polycong/poly.hpp"
#include "polycong/residue.hpp"

namespace {

using namespace polycong;

const DiagonalPolynomial kTwoSquares{2, {1, 1}};
const NamedForm kTwoSquaresForm{NamedForm::Kind::two_squares, 2};

void BM_image_diagonal(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(image_diagonal(kTwoSquares, n));
}
BENCHMARK(BM_image_diagonal)->Range(1 << 12, 1 << 16);

void BM_cyclic_sumset(benchmark::State& state) {
    const std::uint64_t n = 1 << 16;
    ResidueSet squares(n);
    for (std::uint64_t x = 0; x < n; ++x) squares.insert(mul_mod(x, x, n));
    for (auto _ : state) benchmark::DoNotOptimize(cyclic_sumset(squares, squares));
}
BENCHMARK(BM_cyclic_sumset);

void BM_alpha_closed(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(alpha_closed(kTwoSquaresForm, 2, 14));
}
BENCHMARK(BM_alpha_closed);

void BM_alpha_oracle_recurrence(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(alpha_oracle_recurrence(kTwoSquares, 2, 14));
}
BENCHMARK(BM_alpha_oracle_recurrence);

void BM_alpha_oracle(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(alpha_oracle(kTwoSquares, 1 << 14));
}
BENCHMARK(BM_alpha_oracle);

void BM_factorize(benchmark::State& state) {
    // a semiprime whose factors sit just past the trial-division range
    const std::uint64_t n = 1'000'036'000'099ULL;  // 1000003 * 1000033
    for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_factorize);

}  // namespace

BENCHMARK_MAIN();
