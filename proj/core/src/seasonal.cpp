#include "otm/seasonal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace otm {

namespace {

constexpr double kSeasonalityCritical = 1.645;

bool all_positive(std::span<const double> values) {
	return std::all_of(values.begin(), values.end(), [](double v) { return v > 0.0; });
}

} // namespace

double autocorrelation(std::span<const double> values, std::size_t lag) {
	const std::size_t n = values.size();
	if (n == 0 || lag >= n) {
		return 0.0;
	}
	double mean = 0.0;
	for (double v : values) {
		mean += v;
	}
	mean /= static_cast<double>(n);

	double denom = 0.0;
	for (double v : values) {
		denom += (v - mean) * (v - mean);
	}
	if (denom <= 0.0) {
		return 0.0;
	}
	double num = 0.0;
	for (std::size_t t = 0; t + lag < n; ++t) {
		num += (values[t] - mean) * (values[t + lag] - mean);
	}
	return num / denom;
}

bool is_seasonal(const TimeSeries &series) {
	const auto period = static_cast<std::size_t>(series.period());
	const std::size_t n = series.size();
	if (period <= 1 || n < 3 * period) {
		return false;
	}
	const auto values = series.values();
	double sum_sq = 0.0;
	for (std::size_t lag = 1; lag < period; ++lag) {
		const double r = autocorrelation(values, lag);
		sum_sq += r * r;
	}
	const double limit = kSeasonalityCritical * std::sqrt((1.0 + 2.0 * sum_sq) / static_cast<double>(n));
	return std::abs(autocorrelation(values, period)) > limit;
}

SeasonalIndices seasonal_indices(const TimeSeries &series) {
	const auto period = static_cast<std::size_t>(series.period());
	const auto y = series.values();
	const std::size_t n = y.size();
	if (n < 2 * period) {
		throw std::length_error("seasonal_indices: need at least two full seasonal cycles");
	}
	if (!all_positive(y)) {
		throw std::domain_error("seasonal_indices: multiplicative decomposition needs positive values");
	}
	if (period == 1) {
		return SeasonalIndices{{1.0}};
	}

	// Centered moving average of width `period` (2 x period for even periods).
	const std::size_t half = period / 2;
	const bool even = period % 2 == 0;
	std::vector<double> ratio_sum(period, 0.0);
	std::vector<std::size_t> ratio_count(period, 0);
	for (std::size_t i = half; i + half < n; ++i) {
		double sum = 0.0;
		if (even) {
			sum += 0.5 * y[i - half] + 0.5 * y[i + half];
			for (std::size_t j = i - half + 1; j < i + half; ++j) {
				sum += y[j];
			}
		} else {
			for (std::size_t j = i - half; j <= i + half; ++j) {
				sum += y[j];
			}
		}
		const double cma = sum / static_cast<double>(period);
		ratio_sum[i % period] += y[i] / cma;
		ratio_count[i % period] += 1;
	}

	SeasonalIndices out;
	out.factors.resize(period);
	double mean = 0.0;
	for (std::size_t s = 0; s < period; ++s) {
		out.factors[s] = ratio_sum[s] / static_cast<double>(ratio_count[s]);
		mean += out.factors[s];
	}
	mean /= static_cast<double>(period);
	for (double &f : out.factors) {
		f /= mean;
	}
	return out;
}

TimeSeries deseasonalize(const TimeSeries &series, const SeasonalIndices &indices) {
	if (indices.period() != series.period()) {
		throw std::invalid_argument("deseasonalize: index length does not match the series period");
	}
	const auto y = series.values();
	std::vector<double> out(y.size());
	for (std::size_t i = 0; i < y.size(); ++i) {
		out[i] = y[i] / indices.at_time(i + 1);
	}
	return series.with_values(std::move(out));
}

std::vector<double> reseasonalize(std::span<const double> forecasts, const SeasonalIndices &indices,
                                  std::size_t start_t) {
	if (start_t < 1) {
		throw std::invalid_argument("reseasonalize: start_t is 1-based");
	}
	std::vector<double> out(forecasts.size());
	for (std::size_t k = 0; k < forecasts.size(); ++k) {
		out[k] = forecasts[k] * indices.at_time(start_t + k);
	}
	return out;
}

SeasonalAdjustment adjust_seasonality(const TimeSeries &series) {
	if (!all_positive(series.values()) || !is_seasonal(series)) {
		return SeasonalAdjustment{series, std::nullopt};
	}
	auto indices = seasonal_indices(series);
	auto adjusted = deseasonalize(series, indices);
	return SeasonalAdjustment{std::move(adjusted), std::move(indices)};
}

} // namespace otm
