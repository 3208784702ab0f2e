#include <benchmark/benchmark.h>

#include "qfex/arch.hpp"
#include "qfex/diffset.hpp"
#include "qfex/rng.hpp"
#include "qfex/spectrum.hpp"
#include "qfex/train.hpp"

using namespace qfex;

namespace {

void BM_EvaluateSequentialLinear(benchmark::State& state) {
    const auto spec = make_spec(ArchitectureFamily::SequentialLinear,
                                static_cast<int>(state.range(0)));
    const auto params = uniform_angles(parameter_count(spec), 1);
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(spec, params, x));
        x += 0.01;
    }
}
BENCHMARK(BM_EvaluateSequentialLinear)->Arg(2)->Arg(4);

void BM_EvaluateParallelExponential(benchmark::State& state) {
    const auto spec = make_spec(ArchitectureFamily::ParallelExponential,
                                static_cast<int>(state.range(0)));
    const auto params = uniform_angles(parameter_count(spec), 1);
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(spec, params, x));
        x += 0.01;
    }
}
BENCHMARK(BM_EvaluateParallelExponential)->Arg(2)->Arg(3)->Arg(4);

void BM_ParameterShiftGradient(benchmark::State& state) {
    const auto spec = make_spec(ArchitectureFamily::ParallelExponential, 2);
    const auto params = uniform_angles(parameter_count(spec), 2);
    const Dataset data = top_hat_dataset(100);
    for (auto _ : state) {
        benchmark::DoNotOptimize(parameter_shift_gradient(spec, params, data));
    }
}
BENCHMARK(BM_ParameterShiftGradient);

void BM_ExtractFourier(benchmark::State& state) {
    const auto spec = make_spec(ArchitectureFamily::ParallelExponential, 3);
    const auto params = uniform_angles(parameter_count(spec), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(model_spectrum(spec, params));
    }
}
BENCHMARK(BM_ExtractFourier);

void BM_AccessibilityRealization(benchmark::State& state) {
    const auto spec = make_spec(ArchitectureFamily::ParallelExponential, 2);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(accessibility_sample(spec, 10, seed++));
    }
}
BENCHMARK(BM_AccessibilityRealization);

void BM_SearchPerfect(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(diffset::search_perfect(m, m * (m - 1) / 2));
    }
}
BENCHMARK(BM_SearchPerfect)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
