#include "otm/groe.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "otm/theta.hpp"

namespace otm {

std::string_view to_string(CostKind kind) noexcept {
	switch (kind) {
	case CostKind::se:
		return "se";
	case CostKind::ae:
		return "ae";
	case CostKind::sape:
		return "sape";
	}
	return "unknown";
}

CostKind parse_cost(std::string_view name) {
	for (CostKind k : {CostKind::se, CostKind::ae, CostKind::sape}) {
		if (name == to_string(k)) {
			return k;
		}
	}
	throw std::invalid_argument("unknown cost function '" + std::string(name) + "' (expected se, ae or sape)");
}

double cost(CostKind kind, double a, double b) noexcept {
	const double diff = a - b;
	switch (kind) {
	case CostKind::se:
		return diff * diff;
	case CostKind::ae:
		return std::abs(diff);
	case CostKind::sape: {
		const double scale = std::abs(a) + std::abs(b);
		return scale == 0.0 ? 0.0 : 2.0 * std::abs(diff) / scale;
	}
	}
	return std::numeric_limits<double>::quiet_NaN();
}

int p_max(int n, int n1, int m) {
	if (!(1 < n1 && n1 < n) || m < 1) {
		throw std::domain_error("p_max: requires 1 < n1 < n and m >= 1");
	}
	return 1 + (n - n1) / m;
}

void validate(const GroeConfig &config, int n) {
	if (config.m < 1 || config.H < 1 || config.p < 1) {
		throw std::domain_error("GroeConfig: p, m and H must be >= 1");
	}
	if (!(1 < config.n1 && config.n1 < n)) {
		throw std::domain_error("GroeConfig: first origin must satisfy 1 < n1 < n (n1 = " + std::to_string(config.n1) +
		                        ", n = " + std::to_string(n) + ")");
	}
	if (config.p > p_max(n, config.n1, config.m)) {
		throw std::domain_error("GroeConfig: p exceeds the maximum number of origin updates");
	}
}

std::vector<int> origin_schedule(const GroeConfig &config, int n) {
	validate(config, n);
	std::vector<int> origins(static_cast<std::size_t>(config.p));
	for (int i = 0; i < config.p; ++i) {
		origins[static_cast<std::size_t>(i)] = config.n1 + i * config.m;
	}
	return origins;
}

double groe_loss(std::span<const double> values, const Candidate &candidate, const GroeConfig &config,
                 CostKind cost_kind) {
	const int n = static_cast<int>(values.size());
	double loss = 0.0;
	for (int origin : origin_schedule(config, n)) {
		const int steps = std::min(config.H, n - origin);
		if (steps <= 0) {
			continue;
		}
		std::vector<double> predicted;
		try {
			predicted = candidate(values.first(static_cast<std::size_t>(origin)), Horizon(steps));
		} catch (const std::exception &ex) {
			throw EvaluationError("candidate failed at origin " + std::to_string(origin) + ": " + ex.what(), origin);
		}
		if (predicted.size() < static_cast<std::size_t>(steps)) {
			throw EvaluationError("candidate returned too few forecasts at origin " + std::to_string(origin), origin);
		}
		for (int j = 1; j <= steps; ++j) {
			loss += cost(cost_kind, values[static_cast<std::size_t>(origin + j - 1)],
			             predicted[static_cast<std::size_t>(j - 1)]);
		}
	}
	return loss;
}

char to_char(Approach approach) noexcept { return static_cast<char>('a' + static_cast<int>(approach)); }

Approach parse_approach(char c) {
	const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
	if (lower < 'a' || lower > 'h') {
		throw std::invalid_argument(std::string("unknown GROE approach '") + c + "' (expected a-h)");
	}
	return static_cast<Approach>(lower - 'a');
}

GroeConfig approach_config(Approach approach, int n, Horizon horizon) {
	const int h = horizon.steps();
	if (n <= h) {
		throw std::domain_error("approach_config: series length must exceed the horizon");
	}
	const int index = static_cast<int>(approach);
	const bool double_window = index >= 4;
	GroeConfig config;
	config.H = h;
	config.n1 = double_window ? n - 2 * h : n - h;
	switch (index % 4) {
	case 0:
		config.m = h;
		config.p = double_window ? 2 : 1;
		break;
	case 1:
		config.m = (h + 1) / 2;
		config.p = double_window ? 4 : 2;
		break;
	case 2:
		config.m = (h + 2) / 3;
		config.p = double_window ? 6 : 3;
		break;
	default:
		config.m = 1;
		config.p = h;
		break;
	}

	constexpr int kMinFirstOrigin = 4;
	config.n1 = std::max(config.n1, kMinFirstOrigin);
	config.p = std::min(config.p, h);
	if (config.n1 < n) {
		config.p = std::min(config.p, p_max(n, config.n1, config.m));
	}
	return config;
}

ThetaGrid ThetaGrid::standard() { return ThetaGrid{{1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0}}; }

ThetaGrid ThetaGrid::from(std::vector<double> values) {
	if (values.empty()) {
		throw std::invalid_argument("ThetaGrid: empty grid");
	}
	for (std::size_t i = 0; i < values.size(); ++i) {
		if (!(values[i] >= 1.0) || !std::isfinite(values[i])) {
			throw std::invalid_argument("ThetaGrid: candidates must be finite and >= 1");
		}
		if (i > 0 && !(values[i] > values[i - 1])) {
			throw std::invalid_argument("ThetaGrid: candidates must be strictly ascending");
		}
	}
	return ThetaGrid{std::move(values)};
}

ThetaEstimate estimate_theta_detailed(std::span<const double> values, const ThetaGrid &grid,
                                      const GroeConfig &config, CostKind cost_kind,
                                      const ForecasterSpec &extrapolator) {
	if (grid.candidates.empty()) {
		throw std::invalid_argument("estimate_theta: empty grid");
	}
	validate(config, static_cast<int>(values.size()));

	constexpr double kInf = std::numeric_limits<double>::infinity();
	ThetaEstimate out;
	out.losses.assign(grid.candidates.size(), kInf);
	double best = kInf;
	std::string last_error;
	for (std::size_t i = 0; i < grid.candidates.size(); ++i) {
		const double theta = grid.candidates[i];
		const Candidate candidate = [theta, &extrapolator](std::span<const double> prefix, Horizon h) {
			return otm_forecast(prefix, theta, h, extrapolator);
		};
		try {
			const double loss = groe_loss(values, candidate, config, cost_kind);
			if (!std::isfinite(loss)) {
				continue;
			}
			out.losses[i] = loss;
			if (loss < best) {
				best = loss;
				out.theta = theta;
			}
		} catch (const EvaluationError &ex) {
			last_error = ex.what();
		}
	}
	if (!std::isfinite(best)) {
		throw EvaluationError("estimate_theta: every candidate failed" +
		                          (last_error.empty() ? std::string() : " (" + last_error + ")"),
		                      0);
	}
	return out;
}

double estimate_theta(std::span<const double> values, const ThetaGrid &grid, const GroeConfig &config,
                      CostKind cost_kind, const ForecasterSpec &extrapolator) {
	return estimate_theta_detailed(values, grid, config, cost_kind, extrapolator).theta;
}

double estimate_theta(const TimeSeries &series, const ThetaGrid &grid, const GroeConfig &config, CostKind cost_kind,
                      const ForecasterSpec &extrapolator) {
	return estimate_theta(series.values(), grid, config, cost_kind, extrapolator);
}

} // namespace otm
