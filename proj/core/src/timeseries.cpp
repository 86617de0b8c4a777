#include "otm/timeseries.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace otm {

TimeSeries::TimeSeries(std::string id, std::vector<double> values, int period)
    : id_(std::move(id)), values_(std::move(values)), period_(period) {
	if (period_ < 1) {
		throw std::invalid_argument("TimeSeries: period must be >= 1");
	}
	for (double v : values_) {
		if (!std::isfinite(v)) {
			throw std::invalid_argument("TimeSeries: values must be finite (series '" + id_ + "')");
		}
	}
}

TimeSeries TimeSeries::with_values(std::vector<double> values) const {
	return TimeSeries(id_, std::move(values), period_);
}

Horizon::Horizon(int steps) : steps_(steps) {
	if (steps_ < 1) {
		throw std::invalid_argument("Horizon must be >= 1");
	}
}

TrendFit fit_linear_trend(std::span<const double> values) {
	const std::size_t n = values.size();
	if (n < 2) {
		throw std::length_error("fit_linear_trend: need at least 2 observations");
	}

	// Centered form keeps the normal equations well conditioned for long series.
	const double nd = static_cast<double>(n);
	const double t_mean = (nd + 1.0) / 2.0;
	double y_sum = 0.0;
	for (double y : values) {
		y_sum += y;
	}
	const double y_mean = y_sum / nd;

	double sxy = 0.0;
	double sxx = 0.0;
	for (std::size_t i = 0; i < n; ++i) {
		const double dt = static_cast<double>(i + 1) - t_mean;
		sxy += dt * (values[i] - y_mean);
		sxx += dt * dt;
	}

	TrendFit fit;
	fit.slope = sxy / sxx;
	fit.intercept = y_mean - fit.slope * t_mean;
	return fit;
}

TrendFit fit_linear_trend(const TimeSeries &series) {
	return fit_linear_trend(series.values());
}

double trend_value(const TrendFit &fit, std::size_t t) noexcept {
	return fit.intercept + fit.slope * static_cast<double>(t);
}

} // namespace otm
