#include "otm/theta.hpp"

#include <stdexcept>

namespace otm {

ThetaParams ThetaParams::from(double theta1, double theta2) {
	return ThetaParams{theta1, theta2, combination_weight(theta1, theta2)};
}

ThetaLine theta_line(std::span<const double> values, const TrendFit &fit, double theta) {
	ThetaLine line{theta, std::vector<double>(values.size())};
	for (std::size_t i = 0; i < values.size(); ++i) {
		line.values[i] = theta * values[i] + (1.0 - theta) * trend_value(fit, i + 1);
	}
	return line;
}

ThetaLine theta_line(const TimeSeries &series, const TrendFit &fit, double theta) {
	return theta_line(series.values(), fit, theta);
}

double combination_weight(double theta1, double theta2) {
	if (!(theta1 <= 1.0) || !(theta2 >= 1.0)) {
		throw std::domain_error("combination_weight: requires theta1 <= 1 <= theta2");
	}
	if (theta1 == theta2) {
		return 1.0;
	}
	return (theta2 - 1.0) / (theta2 - theta1);
}

std::vector<double> recompose(const ThetaLine &line1, const ThetaLine &line2, double omega) {
	if (line1.values.size() != line2.values.size()) {
		throw std::invalid_argument("recompose: theta lines differ in length");
	}
	std::vector<double> out(line1.values.size());
	for (std::size_t i = 0; i < out.size(); ++i) {
		out[i] = omega * line1.values[i] + (1.0 - omega) * line2.values[i];
	}
	return out;
}

std::vector<double> otm_forecast(std::span<const double> values, double theta, Horizon h,
                                 const ForecasterSpec &extrapolator) {
	if (!(theta >= 1.0)) {
		throw std::domain_error("otm_forecast: theta must be >= 1");
	}
	switch (extrapolator.family) {
	case Family::ses:
	case Family::holt:
	case Family::damped:
		break;
	default:
		throw std::invalid_argument("otm_forecast: theta line extrapolator must be ses, holt or damped");
	}

	const TrendFit trend = fit_linear_trend(values);
	const ThetaLine line = theta_line(values, trend, theta);
	const auto line_forecast = forecast(fit(extrapolator, line.values), h);

	const double short_weight = 1.0 / theta;
	const double long_weight = 1.0 - short_weight;
	const std::size_t n = values.size();
	std::vector<double> out(h.size());
	for (std::size_t k = 0; k < out.size(); ++k) {
		out[k] = long_weight * trend_value(trend, n + k + 1) + short_weight * line_forecast[k];
	}
	return out;
}

std::vector<double> otm_forecast(const TimeSeries &series, double theta, Horizon h,
                                 const ForecasterSpec &extrapolator) {
	return otm_forecast(series.values(), theta, h, extrapolator);
}

} // namespace otm
