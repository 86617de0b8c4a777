#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace otm {

/// A univariate, regularly sampled series. Time index starts at t = 1.
class TimeSeries {
public:
	TimeSeries() = default;
	/// Throws std::invalid_argument if period < 1 or any value is not finite.
	TimeSeries(std::string id, std::vector<double> values, int period = 1);

	const std::string &id() const noexcept { return id_; }
	std::span<const double> values() const noexcept { return values_; }
	int period() const noexcept { return period_; }
	std::size_t size() const noexcept { return values_.size(); }
	bool empty() const noexcept { return values_.empty(); }

	/// 1-based access, matching y_t.
	double at(std::size_t t) const { return values_.at(t - 1); }

	/// Same id and period, different observations.
	TimeSeries with_values(std::vector<double> values) const;

	friend bool operator==(const TimeSeries &, const TimeSeries &) = default;

private:
	std::string id_;
	std::vector<double> values_;
	int period_ = 1;
};

/// Ordinary least squares line y ~ intercept + slope * t over t = 1..n.
struct TrendFit {
	double intercept = 0.0;
	double slope = 0.0;

	double at(double t) const noexcept { return intercept + slope * t; }
};

/// Number of out-of-sample steps requested. Always >= 1.
class Horizon {
public:
	/// Throws std::invalid_argument if steps < 1.
	explicit Horizon(int steps);

	int steps() const noexcept { return steps_; }
	std::size_t size() const noexcept { return static_cast<std::size_t>(steps_); }

	friend bool operator==(Horizon, Horizon) = default;

private:
	int steps_;
};

/// Throws std::length_error when fewer than two observations are given.
TrendFit fit_linear_trend(std::span<const double> values);
TrendFit fit_linear_trend(const TimeSeries &series);

/// intercept + slope * t.
double trend_value(const TrendFit &fit, std::size_t t) noexcept;

} // namespace otm
