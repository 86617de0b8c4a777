#include <benchmark/benchmark.h>

#include <random>

#include "otm/dataset.hpp"
#include "otm/groe.hpp"
#include "otm/pipeline.hpp"
#include "otm/smoothing.hpp"

namespace {

std::vector<double> walk(std::size_t n) {
	std::mt19937_64 rng(42);
	std::normal_distribution<double> step(0.3, 2.0);
	std::vector<double> y(n);
	double v = 500;
	for (auto &x : y) {
		v += step(rng);
		x = v;
	}
	return y;
}

void BM_SesFit(benchmark::State &state) {
	const auto y = walk(static_cast<std::size_t>(state.range(0)));
	const auto spec = otm::ForecasterSpec::of(otm::Family::ses);
	for (auto _ : state) {
		benchmark::DoNotOptimize(otm::fit(spec, y));
	}
}
BENCHMARK(BM_SesFit)->Arg(20)->Arg(60)->Arg(150);

void BM_EstimateTheta(benchmark::State &state) {
	const auto y = walk(static_cast<std::size_t>(state.range(0)));
	const int n = static_cast<int>(y.size());
	const auto approach = static_cast<otm::Approach>(state.range(1));
	const auto config = otm::approach_config(approach, n, otm::Horizon(8));
	const auto grid = otm::ThetaGrid::standard();
	const auto ses = otm::ForecasterSpec::of(otm::Family::ses);
	for (auto _ : state) {
		benchmark::DoNotOptimize(otm::estimate_theta(y, grid, config, otm::CostKind::se, ses));
	}
}
BENCHMARK(BM_EstimateTheta)->Args({60, 0})->Args({60, 3})->Args({60, 7})->Args({150, 3});

void BM_RunOtmCorpus(benchmark::State &state) {
	const auto data = otm::synthesize(40, 7);
	const auto spec = otm::MethodSpec::otm(otm::Approach::d);
	for (auto _ : state) {
		for (const auto &e : data.entries) {
			benchmark::DoNotOptimize(otm::run_otm(e.series, otm::Horizon(e.horizon), spec));
		}
	}
	state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(data.entries.size()));
}
BENCHMARK(BM_RunOtmCorpus)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
