#include <benchmark/benchmark.h>

#include "jordan/coefficients.hpp"
#include "jordan/envelopes.hpp"
#include "jordan/kernels.hpp"

namespace {

void BM_DirectSumSerial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(jordan::coeff_direct_serial(jordan::Family::Tan, 1, 1e-14));
}
BENCHMARK(BM_DirectSumSerial)->Unit(benchmark::kMillisecond);

void BM_DirectSumParallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(jordan::coeff_direct(jordan::Family::Tan, 1, 1e-14));
}
BENCHMARK(BM_DirectSumParallel)->Unit(benchmark::kMillisecond);

const jordan::FamilyEnvelope& tan_envelope() {
    static const jordan::FamilyEnvelope env(jordan::Family::Tan, jordan::EvenZetaCache(20));
    return env;
}

void BM_SweepSerial(benchmark::State& state) {
    const auto xs = jordan::kernels::linspace(-0.9998, 0.9998, 10001);
    const jordan::EnvelopeQuery q{jordan::Family::Tan, 8, jordan::Side::Upper, true};
    for (auto _ : state)
        benchmark::DoNotOptimize(jordan::sweep_bracketing_serial(tan_envelope(), q, xs));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
    const auto xs = jordan::kernels::linspace(-0.9998, 0.9998, 10001);
    const jordan::EnvelopeQuery q{jordan::Family::Tan, 8, jordan::Side::Upper, true};
    for (auto _ : state) benchmark::DoNotOptimize(jordan::sweep_bracketing(tan_envelope(), q, xs));
}
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
