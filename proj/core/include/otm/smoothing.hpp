#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "otm/seasonal.hpp"
#include "otm/timeseries.hpp"

namespace otm {

enum class Family {
	naive,
	naive2,
	ses,
	holt,
	holt_winters,
	damped,
	seasonal_damped,
};

std::string_view to_string(Family family) noexcept;
/// Accepts the names printed by to_string plus "holt-winters" / "seasonal-damped".
/// Throws std::invalid_argument for unknown names.
Family parse_family(std::string_view name);

/// Which forecaster to fit, plus optionally pinned parameters. Unpinned
/// parameters are chosen by grid search: smoothing weights over [0, 1] in
/// steps of 0.01, damping over [0.80, 0.98] in steps of 0.01.
struct ForecasterSpec {
	Family family = Family::ses;
	std::optional<double> alpha;
	std::optional<double> beta;
	std::optional<double> gamma;
	std::optional<double> phi;

	static ForecasterSpec of(Family family) { return ForecasterSpec{family, {}, {}, {}, {}}; }
};

struct SmoothingParams {
	double alpha = 0.0;
	double beta = 0.0;
	double gamma = 0.0;
	double phi = 1.0;
};

/// A fitted forecaster. `applied` differs from `spec.family` when a seasonal
/// family fell back to its non-seasonal sibling.
struct FittedForecaster {
	ForecasterSpec spec;
	Family applied = Family::ses;
	SmoothingParams params;
	double level = 0.0;
	double trend = 0.0;
	/// Seasonal factors by season position (t - 1) mod period, as of the end of the sample.
	std::vector<double> seasonal;
	/// Indices used to adjust the data (naive2 only).
	std::optional<SeasonalIndices> adjustment;
	std::size_t fitted_length = 0;
	double sse = 0.0;
};

/// Fits `spec` to `series`. Seasonal families (holt_winters, seasonal_damped,
/// naive2) consult the seasonality test and fall back to their non-seasonal
/// behaviour when it fails. Throws std::length_error when the series is too
/// short (n < 3 for trended families, n < 2 otherwise) and
/// std::invalid_argument for pinned parameters outside their domain.
FittedForecaster fit(const ForecasterSpec &spec, const TimeSeries &series);

/// Non-seasonal fit on raw values.
FittedForecaster fit(const ForecasterSpec &spec, std::span<const double> values);

std::vector<double> forecast(const FittedForecaster &fitted, Horizon h);

/// One-step-ahead in-sample SSE and final states for fixed parameters. Exposed
/// for tests and for callers that want to skip the search.
struct SmoothingRun {
	double sse = 0.0;
	double level = 0.0;
	double trend = 0.0;
};
SmoothingRun run_ses(std::span<const double> y, double alpha) noexcept;
SmoothingRun run_damped(std::span<const double> y, double alpha, double beta, double phi) noexcept;

} // namespace otm
