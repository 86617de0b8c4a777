#pragma once

#include <span>
#include <vector>

#include "otm/smoothing.hpp"
#include "otm/timeseries.hpp"

namespace otm {

/// Two theta coefficients and the weight that makes their combination
/// reproduce the data exactly.
struct ThetaParams {
	double theta1 = 0.0;
	double theta2 = 2.0;
	double omega = 0.5;

	/// Requires theta1 <= 1 <= theta2; omega is derived from the pair.
	static ThetaParams from(double theta1, double theta2);
};

/// Z_t(theta) = theta * y_t + (1 - theta) * (intercept + slope * t).
struct ThetaLine {
	double theta = 1.0;
	std::vector<double> values;
};

ThetaLine theta_line(std::span<const double> values, const TrendFit &fit, double theta);
ThetaLine theta_line(const TimeSeries &series, const TrendFit &fit, double theta);

/// omega(theta1, theta2) = (theta2 - 1) / (theta2 - theta1), with omega(1, 1) = 1.
/// Throws std::domain_error unless theta1 <= 1 <= theta2.
double combination_weight(double theta1, double theta2);

/// omega * line1 + (1 - omega) * line2, elementwise. Throws
/// std::invalid_argument on a length mismatch.
std::vector<double> recompose(const ThetaLine &line1, const ThetaLine &line2, double omega);

/// Forecasts from the long-term line Z(0) and the short-term line Z(theta):
///
///   Y(n+k) = (1 - 1/theta) * trend(n+k) + (1/theta) * Zhat(n+k)
///
/// where Zhat extrapolates Z(theta) with `extrapolator` (ses, holt or damped).
/// Throws std::domain_error for theta < 1 and std::invalid_argument for other
/// extrapolator families.
std::vector<double> otm_forecast(std::span<const double> values, double theta, Horizon h,
                                 const ForecasterSpec &extrapolator);
std::vector<double> otm_forecast(const TimeSeries &series, double theta, Horizon h,
                                 const ForecasterSpec &extrapolator);

} // namespace otm
