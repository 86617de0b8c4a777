#pragma once

// Reference computations written independently of the library code paths.
// Each one follows the textbook formula as directly as possible.

#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

struct Line {
	double intercept;
	double slope;
};

// Solves the 2x2 normal equations [n, St; St, Stt] [a b]' = [Sy, Sty]' by Cramer's rule.
inline Line ols(const std::vector<double> &y) {
	double n = static_cast<double>(y.size());
	double st = 0, stt = 0, sy = 0, sty = 0;
	for (std::size_t i = 0; i < y.size(); ++i) {
		const double t = static_cast<double>(i + 1);
		st += t;
		stt += t * t;
		sy += y[i];
		sty += t * y[i];
	}
	const double det = n * stt - st * st;
	return {(sy * stt - st * sty) / det, (n * sty - st * sy) / det};
}

// SES with level initialised at y_1, written as the weighted-average recursion.
inline double ses_level(const std::vector<double> &y, double alpha) {
	double level = y.front();
	for (double v : y) {
		level = alpha * v + (1.0 - alpha) * level;
	}
	return level;
}

// Theta forecast composed step by step: Z(theta), SES level at fixed alpha,
// then (1 - 1/theta) trend + (1/theta) level.
inline std::vector<double> theta_forecast_fixed_alpha(const std::vector<double> &y, double theta, double alpha,
                                                      int h) {
	const Line line = ols(y);
	std::vector<double> z(y.size());
	for (std::size_t i = 0; i < y.size(); ++i) {
		const double t = static_cast<double>(i + 1);
		z[i] = theta * y[i] + (1.0 - theta) * (line.intercept + line.slope * t);
	}
	const double level = ses_level(z, alpha);
	std::vector<double> out;
	const double n = static_cast<double>(y.size());
	for (int k = 1; k <= h; ++k) {
		out.push_back((1.0 - 1.0 / theta) * (line.intercept + line.slope * (n + k)) + level / theta);
	}
	return out;
}

// Number of origins n1, n1 + m, ... that do not pass n.
inline int count_origins(int n, int n1, int m) {
	int count = 0;
	for (int origin = n1; origin <= n; origin += m) {
		++count;
	}
	return count;
}

using Forecaster = std::function<std::vector<double>(const std::vector<double> &prefix, int h)>;
using Cost = std::function<double(double, double)>;

inline std::vector<double> prefix(const std::vector<double> &y, int len) {
	return {y.begin(), y.begin() + len};
}

// Single split at n - h, scored on the last h observations.
inline double fixed_origin_loss(const std::vector<double> &y, int h, const Forecaster &f, const Cost &g) {
	const int n = static_cast<int>(y.size());
	const auto fc = f(prefix(y, n - h), h);
	double loss = 0;
	for (int j = 0; j < h; ++j) {
		loss += g(y[static_cast<std::size_t>(n - h + j)], fc[static_cast<std::size_t>(j)]);
	}
	return loss;
}

// Origins n1, n1 + 1, ..., n - 1; each forecasts every remaining observation.
inline double rolling_origin_loss(const std::vector<double> &y, int n1, const Forecaster &f, const Cost &g) {
	const int n = static_cast<int>(y.size());
	double loss = 0;
	for (int origin = n1; origin < n; ++origin) {
		const auto fc = f(prefix(y, origin), n - origin);
		for (int j = 0; j < n - origin; ++j) {
			loss += g(y[static_cast<std::size_t>(origin + j)], fc[static_cast<std::size_t>(j)]);
		}
	}
	return loss;
}

// Sum of one-step-ahead errors g(Yhat_{t+1|t}, y_{t+1}). Starts at t = 2: a
// trend-based forecaster has nothing to fit on a single observation.
inline double one_step_loss(const std::vector<double> &y, const Forecaster &f, const Cost &g) {
	const int n = static_cast<int>(y.size());
	double loss = 0;
	for (int t = 2; t <= n - 1; ++t) {
		const auto fc = f(prefix(y, t), 1);
		loss += g(fc[0], y[static_cast<std::size_t>(t)]);
	}
	return loss;
}

// Double sum over origins and steps, written out directly.
inline double generalised_loss(const std::vector<double> &y, int p, int m, int H, int n1, const Forecaster &f,
                               const Cost &g) {
	const int n = static_cast<int>(y.size());
	double loss = 0;
	for (int i = 1; i <= p; ++i) {
		const int origin = n1 + (i - 1) * m;
		const int steps = std::min(H, n - origin);
		if (steps <= 0) {
			continue;
		}
		const auto fc = f(prefix(y, origin), steps);
		for (int j = 1; j <= steps; ++j) {
			loss += g(y[static_cast<std::size_t>(origin + j - 1)], fc[static_cast<std::size_t>(j - 1)]);
		}
	}
	return loss;
}

inline double smape(const std::vector<double> &a, const std::vector<double> &f) {
	double s = 0;
	for (std::size_t i = 0; i < a.size(); ++i) {
		const double d = std::abs(a[i]) + std::abs(f[i]);
		s += d == 0 ? 0 : std::abs(a[i] - f[i]) / d;
	}
	return 200.0 * s / static_cast<double>(a.size());
}

inline double mase(const std::vector<double> &in, const std::vector<double> &a, const std::vector<double> &f) {
	double mae = 0;
	for (std::size_t i = 0; i < a.size(); ++i) {
		mae += std::abs(a[i] - f[i]);
	}
	mae /= static_cast<double>(a.size());
	double scale = 0;
	for (std::size_t t = 1; t < in.size(); ++t) {
		scale += std::abs(in[t] - in[t - 1]);
	}
	scale /= static_cast<double>(in.size() - 1);
	return mae / scale;
}

// Seeded positive random walk with drift.
inline std::vector<double> random_walk(std::mt19937_64 &rng, std::size_t n, double start = 100.0) {
	std::normal_distribution<double> step(0.3, 2.0);
	std::vector<double> y(n);
	double v = start;
	for (auto &x : y) {
		v += step(rng);
		x = v;
	}
	return y;
}

} // namespace oracle
