#include <benchmark/benchmark.h>

#include "chtg/ball.hpp"
#include "chtg/certify.hpp"
#include "chtg/classify.hpp"
#include "chtg/triangle.hpp"

using namespace chtg;
using exact::CycloElement;
using exact::Rational;

namespace {

CycloElement dense_element(long N, long seed) {
    std::vector<std::pair<long, Rational>> t;
    for (long e = 0; e < N; ++e)
        t.emplace_back(e, Rational((seed * (e + 3)) % 17 - 8, (e % 5) + 1));
    return CycloElement::from_monomials(N, t);
}

void BM_CycloMul(benchmark::State& state) {
    const long N = state.range(0);
    auto a = dense_element(N, 2), b = dense_element(N, 5);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void BM_CycloGalois(benchmark::State& state) {
    const long N = state.range(0);
    auto a = dense_element(N, 3);
    long k = N - 1;  // conjugation, always a unit
    for (auto _ : state) benchmark::DoNotOptimize(a.galois(k));
}

void BM_EmbedComplex(benchmark::State& state) {
    auto a = dense_element(60, 7);
    for (auto _ : state) benchmark::DoNotOptimize(exact::embed_complex(a, 128));
}

void BM_CircleResidualExact(benchmark::State& state) {
    certify::TraceCandidate c{7, 1, 2, 4};
    for (auto _ : state) benchmark::DoNotOptimize(certify::circle_residual_exact(c, 12));
}

void BM_GramAndTrace(benchmark::State& state) {
    auto params = triangle::TriangleParams::mm_inf(10, 0.35);
    for (auto _ : state) {
        auto g = triangle::build_gram(params, 128);
        auto r = triangle::reflection_matrices(g);
        benchmark::DoNotOptimize((r[0] * r[1] * r[2]).trace());
    }
}

void BM_Search(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(certify::search_finite_order_traces(3, state.range(0)));
}

void BM_EllipticWindows(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classify::elliptic_windows(10));
}

}  // namespace

BENCHMARK(BM_CycloMul)->Arg(12)->Arg(60)->Arg(120);
BENCHMARK(BM_CycloGalois)->Arg(12)->Arg(60)->Arg(120);
BENCHMARK(BM_EmbedComplex);
BENCHMARK(BM_CircleResidualExact);
BENCHMARK(BM_GramAndTrace);
BENCHMARK(BM_Search)->Arg(12)->Arg(24);
BENCHMARK(BM_EllipticWindows);

BENCHMARK_MAIN();
