#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "otm/groe.hpp"
#include "otm/smoothing.hpp"
#include "otm/timeseries.hpp"

namespace otm {

enum class MethodKind { otm, classic_theta, benchmark };

/// A forecasting method as run by the pipeline.
struct MethodSpec {
	std::string name;
	MethodKind kind = MethodKind::otm;
	// otm
	Approach approach = Approach::d;
	CostKind cost = CostKind::se;
	ThetaGrid grid = ThetaGrid::standard();
	ForecasterSpec extrapolator = ForecasterSpec::of(Family::ses);
	// benchmark
	ForecasterSpec benchmark = ForecasterSpec::of(Family::naive);

	/// Named "OTM(<approach>)" unless a name is given.
	static MethodSpec otm(Approach approach, CostKind cost = CostKind::se,
	                      ForecasterSpec extrapolator = ForecasterSpec::of(Family::ses),
	                      ThetaGrid grid = ThetaGrid::standard(), std::string name = {});
	/// "Theta": theta fixed at 2 with SES on the short-term line.
	static MethodSpec classic_theta();
	/// Named after the family ("Naive", "SES", "Holt/Holt-Winters", ...) unless a name is given.
	static MethodSpec benchmark_of(Family family, std::string name = {});
};

struct ForecastResult {
	std::string series_id;
	std::string method;
	std::vector<double> forecasts;
	std::optional<double> chosen_theta;
	/// True when the series was deseasonalized before forecasting.
	bool seasonal = false;
	/// Set when the estimation step could not run and theta fell back to 2.
	std::string diagnostic;
	std::chrono::duration<double> elapsed{0.0};
};

/// Raised when a series is too short for the requested method.
class PipelineError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Seasonality test, deseasonalization, theta estimation by GROE on the
/// adjusted series, theta-line forecast, reseasonalization.
ForecastResult run_otm(const TimeSeries &series, Horizon h, const MethodSpec &spec);

/// theta = 2 with SES and no estimation step.
ForecastResult run_classic_theta(const TimeSeries &series, Horizon h);

ForecastResult run_benchmark(const TimeSeries &series, Horizon h, const MethodSpec &spec);

/// Dispatches on spec.kind.
ForecastResult run_method(const TimeSeries &series, Horizon h, const MethodSpec &spec);

} // namespace otm
