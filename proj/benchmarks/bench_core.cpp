#include <benchmark/benchmark.h>

#include <random>

#include "quatdom/closed_forms.hpp"
#include "quatdom/domains.hpp"
#include "quatdom/mc.hpp"
#include "quatdom/rng.hpp"

using namespace quatdom;

namespace {

QMatrix random_pd(std::mt19937_64& gen, std::size_t n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Quaternion> e(n * n);
    for (auto& q : e) q = {dist(gen), dist(gen), dist(gen), dist(gen)};
    const QMatrix g(n, n, std::move(e));
    return g.multiply(g.adjoint())
        .add(QMatrix::identity(n).scale(0.1))
        .with_tag(StructureTag::hermitian);
}

void BM_QuatMul(benchmark::State& state) {
    Quaternion a{0.3, -0.2, 0.9, 0.4}, b{1.1, 0.6, -0.5, 0.2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = a * b);
    }
}
BENCHMARK(BM_QuatMul);

void BM_QMatMul(benchmark::State& state) {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const std::size_t n = std::size_t(state.range(0));
    std::vector<Quaternion> e(n * n);
    for (auto& q : e) q = {dist(gen), dist(gen), dist(gen), dist(gen)};
    const QMatrix a(n, n, e);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.multiply(a));
    }
}
BENCHMARK(BM_QMatMul)->Arg(2)->Arg(4)->Arg(8);

void BM_Cholesky(benchmark::State& state) {
    std::mt19937_64 gen(2);
    const QMatrix h = random_pd(gen, std::size_t(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cholesky(h));
    }
}
BENCHMARK(BM_Cholesky)->Arg(2)->Arg(4)->Arg(8);

void BM_QdetHermitian(benchmark::State& state) {
    std::mt19937_64 gen(3);
    const QMatrix h = random_pd(gen, std::size_t(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qdet_hermitian(h));
    }
}
BENCHMARK(BM_QdetHermitian)->Arg(2)->Arg(4);

void BM_PhiloxPoint(benchmark::State& state) {
    const Philox rng(42);
    double buf[16];
    std::uint64_t i = 0;
    for (auto _ : state) {
        sample_uniforms(rng, i++, buf, 12);
        benchmark::DoNotOptimize(buf[0]);
    }
}
BENCHMARK(BM_PhiloxPoint);

void BM_MembershipSym2(benchmark::State& state) {
    DomainEvaluator eval(DomainSpec::make(DomainKind::Sym, 1, 2));
    const Philox rng(42);
    double u[12], x[12];
    std::uint64_t i = 0;
    for (auto _ : state) {
        sample_uniforms(rng, i++, u, 12);
        for (int d = 0; d < 12; ++d) x[d] = 2.0 * u[d] - 1.0;
        benchmark::DoNotOptimize(eval.contains(std::span<const double>(x, 12)));
    }
}
BENCHMARK(BM_MembershipSym2);

void BM_ExactVolume(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vol_Sym(n));
    }
}
BENCHMARK(BM_ExactVolume)->Arg(2)->Arg(4)->Arg(6);

void BM_MCVolumeSmall(benchmark::State& state) {
    const DomainSpec spec = DomainSpec::make(DomainKind::RI, 1, 1);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_volume(spec, 10000, seed++, 1));
    }
}
BENCHMARK(BM_MCVolumeSmall);

}  // namespace

BENCHMARK_MAIN();
