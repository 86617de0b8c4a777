#include "otm/pipeline.hpp"

#include <string>

#include "otm/seasonal.hpp"
#include "otm/theta.hpp"

namespace otm {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kClassicTheta = 2.0;

std::string benchmark_name(Family family) {
	switch (family) {
	case Family::naive:
		return "Naive";
	case Family::naive2:
		return "Naive2";
	case Family::ses:
		return "SES";
	case Family::holt:
		return "Holt";
	case Family::holt_winters:
		return "Holt/Holt-Winters";
	case Family::damped:
		return "Damped";
	case Family::seasonal_damped:
		return "Damped/Seasonal-Damped";
	}
	return "Benchmark";
}

// Estimates theta on the adjusted series, or reports why it could not.
double select_theta(std::span<const double> adjusted, Horizon h, const MethodSpec &spec, std::string &diagnostic) {
	const auto &candidates = spec.grid.candidates;
	if (candidates.size() == 1) {
		return candidates.front();
	}
	const int n = static_cast<int>(adjusted.size());
	if (n <= h.steps()) {
		diagnostic = "series not longer than the horizon; theta fixed at 2";
		return kClassicTheta;
	}
	const GroeConfig config = approach_config(spec.approach, n, h);
	try {
		validate(config, n);
	} catch (const std::domain_error &) {
		diagnostic = "no valid validation schedule for n = " + std::to_string(n) + "; theta fixed at 2";
		return kClassicTheta;
	}
	return estimate_theta(adjusted, spec.grid, config, spec.cost, spec.extrapolator);
}

ForecastResult forecast_with_theta(const TimeSeries &series, Horizon h, const MethodSpec &spec, bool estimate) {
	const auto start = Clock::now();
	if (series.size() < 3) {
		throw PipelineError("series '" + series.id() + "' is too short for a theta forecast (n < 3)");
	}

	ForecastResult result;
	result.series_id = series.id();
	result.method = spec.name;

	const SeasonalAdjustment adjustment = adjust_seasonality(series);
	const auto adjusted = adjustment.adjusted.values();
	result.seasonal = adjustment.applied();

	const double theta =
	    estimate ? select_theta(adjusted, h, spec, result.diagnostic) : kClassicTheta;
	result.chosen_theta = theta;

	auto forecasts = otm_forecast(adjusted, theta, h, spec.extrapolator);
	if (adjustment.indices) {
		forecasts = reseasonalize(forecasts, *adjustment.indices, series.size() + 1);
	}
	result.forecasts = std::move(forecasts);
	result.elapsed = Clock::now() - start;
	return result;
}

} // namespace

MethodSpec MethodSpec::otm(Approach approach, CostKind cost, ForecasterSpec extrapolator, ThetaGrid grid,
                           std::string name) {
	MethodSpec spec;
	spec.name = name.empty() ? std::string("OTM(") + to_char(approach) + ")" : std::move(name);
	spec.kind = MethodKind::otm;
	spec.approach = approach;
	spec.cost = cost;
	spec.extrapolator = extrapolator;
	spec.grid = std::move(grid);
	return spec;
}

MethodSpec MethodSpec::classic_theta() {
	MethodSpec spec;
	spec.name = "Theta";
	spec.kind = MethodKind::classic_theta;
	spec.grid = ThetaGrid{{kClassicTheta}};
	spec.extrapolator = ForecasterSpec::of(Family::ses);
	return spec;
}

MethodSpec MethodSpec::benchmark_of(Family family, std::string name) {
	MethodSpec spec;
	spec.name = name.empty() ? benchmark_name(family) : std::move(name);
	spec.kind = MethodKind::benchmark;
	spec.benchmark = ForecasterSpec::of(family);
	return spec;
}

ForecastResult run_otm(const TimeSeries &series, Horizon h, const MethodSpec &spec) {
	if (spec.kind != MethodKind::otm) {
		throw std::invalid_argument("run_otm: method '" + spec.name + "' is not an OTM specification");
	}
	return forecast_with_theta(series, h, spec, true);
}

ForecastResult run_classic_theta(const TimeSeries &series, Horizon h) {
	return forecast_with_theta(series, h, MethodSpec::classic_theta(), false);
}

ForecastResult run_benchmark(const TimeSeries &series, Horizon h, const MethodSpec &spec) {
	if (spec.kind != MethodKind::benchmark) {
		throw std::invalid_argument("run_benchmark: method '" + spec.name + "' is not a benchmark");
	}
	const auto start = Clock::now();
	ForecastResult result;
	result.series_id = series.id();
	result.method = spec.name;
	const FittedForecaster fitted = fit(spec.benchmark, series);
	result.seasonal = fitted.applied == Family::naive2 || fitted.applied == Family::holt_winters ||
	                  fitted.applied == Family::seasonal_damped;
	result.forecasts = forecast(fitted, h);
	result.elapsed = Clock::now() - start;
	return result;
}

ForecastResult run_method(const TimeSeries &series, Horizon h, const MethodSpec &spec) {
	switch (spec.kind) {
	case MethodKind::otm:
		return run_otm(series, h, spec);
	case MethodKind::classic_theta: {
		auto result = run_classic_theta(series, h);
		result.method = spec.name;
		return result;
	}
	case MethodKind::benchmark:
		return run_benchmark(series, h, spec);
	}
	throw std::invalid_argument("run_method: unknown method kind");
}

} // namespace otm
