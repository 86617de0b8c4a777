#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "otm/timeseries.hpp"

namespace otm {

/// Multiplicative seasonal factors, one per season position (t - 1) mod period.
/// Normalized so their mean is 1.
struct SeasonalIndices {
	std::vector<double> factors;

	int period() const noexcept { return static_cast<int>(factors.size()); }
	/// Factor for 1-based time index t.
	double at_time(std::size_t t) const noexcept { return factors[(t - 1) % factors.size()]; }
};

/// Sample autocorrelation at `lag` (biased estimator, denominator sum of squares).
/// Returns 0 for a series with no variation.
double autocorrelation(std::span<const double> values, std::size_t lag);

/// Seasonality test: |r_m| > 1.645 * sqrt((1 + 2 * sum_{i<m} r_i^2) / n) where m is
/// the period. False when period == 1 or n < 3 * period.
bool is_seasonal(const TimeSeries &series);

/// Classical multiplicative decomposition: centered moving average, ratio to
/// the moving average, per-position mean, normalized to mean 1.
/// Throws std::domain_error for non-positive values and std::length_error when
/// n < 2 * period.
SeasonalIndices seasonal_indices(const TimeSeries &series);

/// y_t / factor(t). Throws std::invalid_argument if the index period differs.
TimeSeries deseasonalize(const TimeSeries &series, const SeasonalIndices &indices);

/// Multiplies forecast k (k = 0..h-1) by the factor of time start_t + k.
std::vector<double> reseasonalize(std::span<const double> forecasts, const SeasonalIndices &indices,
                                  std::size_t start_t);

/// Result of the seasonality test plus (when it passes) deseasonalization.
struct SeasonalAdjustment {
	TimeSeries adjusted;
	std::optional<SeasonalIndices> indices;

	bool applied() const noexcept { return indices.has_value(); }
};

/// Tests for seasonality and deseasonalizes when the test passes. Series with
/// any non-positive value are left unadjusted since the multiplicative model is
/// undefined for them.
SeasonalAdjustment adjust_seasonality(const TimeSeries &series);

} // namespace otm
