#include "otm/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace otm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Weight grids are held as integer hundredths so every grid point is the
// correctly rounded double of k / 100.
constexpr int kWeightSteps = 100;
constexpr int kPhiLo = 80;
constexpr int kPhiHi = 98;
// Three-weight seasonal searches: coarse pass, then a dense pass around the
// coarse optimum.
constexpr int kCoarseStride = 5;
constexpr int kRefineRadius = 4;

double hundredths(int k) { return static_cast<double>(k) / 100.0; }

bool is_trended(Family f) {
	return f == Family::holt || f == Family::holt_winters || f == Family::damped || f == Family::seasonal_damped;
}

bool is_damped(Family f) { return f == Family::damped || f == Family::seasonal_damped; }

void check_weight(const std::optional<double> &w, const char *name) {
	if (w && !(*w >= 0.0 && *w <= 1.0)) {
		throw std::invalid_argument(std::string("ForecasterSpec: ") + name + " must lie in [0, 1]");
	}
}

void validate(const ForecasterSpec &spec) {
	check_weight(spec.alpha, "alpha");
	check_weight(spec.beta, "beta");
	check_weight(spec.gamma, "gamma");
	if (spec.phi && !(*spec.phi > 0.0 && *spec.phi <= 1.0)) {
		throw std::invalid_argument("ForecasterSpec: phi must lie in (0, 1]");
	}
}

// Candidate values of one parameter: the pinned value, or grid points
// lo..hi (in hundredths) with the given stride.
std::vector<double> candidates(const std::optional<double> &pinned, int lo, int hi, int stride) {
	if (pinned) {
		return {*pinned};
	}
	std::vector<double> out;
	for (int k = lo; k <= hi; k += stride) {
		out.push_back(hundredths(k));
	}
	if (stride > 1 && (hi - lo) % stride != 0) {
		out.push_back(hundredths(hi));
	}
	return out;
}

int to_hundredths(double v) { return static_cast<int>(std::lround(v * 100.0)); }

// The grid searches only need to know whether a point beats the incumbent.
// SSE is a running sum of squares, so a run can stop as soon as it reaches
// `cap`; such runs report infinity.
double ses_sse(std::span<const double> y, double alpha, double cap) noexcept {
	double level = y[0];
	double sse = 0.0;
	for (double v : y) {
		const double e = v - level;
		sse += e * e;
		if (sse >= cap) {
			return kInf;
		}
		level += alpha * e;
	}
	return sse;
}

double damped_sse(std::span<const double> y, double alpha, double beta, double phi, double cap) noexcept {
	double level = y[0];
	double trend = y[1] - y[0];
	double sse = 0.0;
	for (double v : y) {
		const double damped_trend = phi * trend;
		const double e = v - (level + damped_trend);
		sse += e * e;
		if (!(sse < cap)) {
			return kInf;
		}
		level += damped_trend + alpha * e;
		trend = damped_trend + beta * alpha * e;
	}
	return sse;
}

struct SeasonalRun {
	double sse = kInf;
	double level = 0.0;
	double trend = 0.0;
	std::vector<double> seasonal;
};

// Additive (optionally damped) trend with multiplicative seasonality.
SeasonalRun run_seasonal(std::span<const double> y, const std::vector<double> &initial, double alpha, double beta,
                         double gamma, double phi, bool keep_states, double cap = kInf) {
	const std::size_t m = initial.size();
	std::vector<double> s = initial;
	double level = y[0] / s[0];
	double trend = y[1] / s[1 % m] - level;
	double sse = 0.0;
	for (std::size_t t = 0; t < y.size(); ++t) {
		const std::size_t pos = t % m;
		const double base = level + phi * trend;
		const double e = y[t] - base * s[pos];
		sse += e * e;
		if (!(sse < cap)) {
			return {};
		}
		const double next_level = alpha * (y[t] / s[pos]) + (1.0 - alpha) * base;
		if (!(next_level > 0.0) || !std::isfinite(next_level)) {
			return {};
		}
		trend = beta * (next_level - level) + (1.0 - beta) * phi * trend;
		s[pos] = gamma * (y[t] / next_level) + (1.0 - gamma) * s[pos];
		level = next_level;
	}
	if (!std::isfinite(sse)) {
		return {};
	}
	SeasonalRun out{sse, level, trend, {}};
	if (keep_states) {
		out.seasonal = std::move(s);
	}
	return out;
}

void require_length(Family family, std::size_t n) {
	const std::size_t need = is_trended(family) ? 3 : 2;
	if (n < need) {
		throw std::length_error("fit(" + std::string(to_string(family)) + "): need at least " +
		                        std::to_string(need) + " observations");
	}
}

FittedForecaster fit_naive(const ForecasterSpec &spec, std::span<const double> y) {
	FittedForecaster out;
	out.spec = spec;
	out.applied = Family::naive;
	out.level = y.back();
	out.fitted_length = y.size();
	for (std::size_t t = 1; t < y.size(); ++t) {
		const double e = y[t] - y[t - 1];
		out.sse += e * e;
	}
	return out;
}

FittedForecaster fit_ses(const ForecasterSpec &spec, std::span<const double> y) {
	double best_sse = kInf;
	double best_alpha = spec.alpha.value_or(0.0);
	for (double alpha : candidates(spec.alpha, 0, kWeightSteps, 1)) {
		const double sse = ses_sse(y, alpha, best_sse);
		if (sse < best_sse) {
			best_sse = sse;
			best_alpha = alpha;
		}
	}
	const auto run = run_ses(y, best_alpha);
	FittedForecaster out;
	out.spec = spec;
	out.applied = Family::ses;
	out.params.alpha = best_alpha;
	out.level = run.level;
	out.fitted_length = y.size();
	out.sse = run.sse;
	return out;
}

FittedForecaster fit_trend(const ForecasterSpec &spec, Family applied, std::span<const double> y) {
	const auto alphas = candidates(spec.alpha, 0, kWeightSteps, 1);
	const auto betas = candidates(spec.beta, 0, kWeightSteps, 1);
	const auto phis = is_damped(applied) ? candidates(spec.phi, kPhiLo, kPhiHi, 1) : std::vector<double>{1.0};

	SmoothingParams best{alphas.front(), betas.front(), 0.0, phis.front()};
	double best_sse = kInf;
	for (double alpha : alphas) {
		for (double beta : betas) {
			for (double phi : phis) {
				const double sse = damped_sse(y, alpha, beta, phi, best_sse);
				if (sse < best_sse) {
					best_sse = sse;
					best = {alpha, beta, 0.0, phi};
				}
			}
		}
	}
	const auto run = run_damped(y, best.alpha, best.beta, best.phi);
	FittedForecaster out;
	out.spec = spec;
	out.applied = applied;
	out.params = best;
	out.level = run.level;
	out.trend = run.trend;
	out.fitted_length = y.size();
	out.sse = run.sse;
	return out;
}

FittedForecaster fit_seasonal(const ForecasterSpec &spec, Family applied, std::span<const double> y,
                              const SeasonalIndices &indices) {
	const bool damped = is_damped(applied);
	const auto &init = indices.factors;

	SmoothingParams best{spec.alpha.value_or(0.0), spec.beta.value_or(0.0), spec.gamma.value_or(0.0),
	                     damped ? spec.phi.value_or(hundredths(kPhiLo)) : 1.0};
	double best_sse = kInf;
	auto search = [&](const std::vector<double> &as, const std::vector<double> &bs, const std::vector<double> &gs,
	                  const std::vector<double> &ps) {
		for (double a : as) {
			for (double b : bs) {
				for (double g : gs) {
					for (double p : ps) {
						const double sse = run_seasonal(y, init, a, b, g, p, false, best_sse).sse;
						if (sse < best_sse) {
							best_sse = sse;
							best = {a, b, g, p};
						}
					}
				}
			}
		}
	};
	auto phi_grid = [&](int lo, int hi, int stride) {
		return damped ? candidates(spec.phi, lo, hi, stride) : std::vector<double>{1.0};
	};

	search(candidates(spec.alpha, 0, kWeightSteps, kCoarseStride), candidates(spec.beta, 0, kWeightSteps, kCoarseStride),
	       candidates(spec.gamma, 0, kWeightSteps, kCoarseStride), phi_grid(kPhiLo, kPhiHi, 2));

	if (std::isfinite(best_sse)) {
		auto around = [](const std::optional<double> &pinned, double centre, int lo, int hi, int radius) {
			const int c = to_hundredths(centre);
			return candidates(pinned, std::max(lo, c - radius), std::min(hi, c + radius), 1);
		};
		const SmoothingParams coarse = best;
		search(around(spec.alpha, coarse.alpha, 0, kWeightSteps, kRefineRadius),
		       around(spec.beta, coarse.beta, 0, kWeightSteps, kRefineRadius),
		       around(spec.gamma, coarse.gamma, 0, kWeightSteps, kRefineRadius),
		       damped ? around(spec.phi, coarse.phi, kPhiLo, kPhiHi, 2) : std::vector<double>{1.0});
	}

	FittedForecaster out;
	out.spec = spec;
	out.applied = applied;
	out.params = best;
	out.fitted_length = y.size();
	const auto run = run_seasonal(y, init, best.alpha, best.beta, best.gamma, best.phi, true);
	if (std::isfinite(run.sse)) {
		out.level = run.level;
		out.trend = run.trend;
		out.seasonal = run.seasonal;
		out.sse = run.sse;
	} else {
		// No admissible parameter point: hold the initial states.
		out.level = y[0] / init[0];
		out.trend = 0.0;
		out.seasonal = init;
		out.sse = kInf;
	}
	return out;
}

} // namespace

std::string_view to_string(Family family) noexcept {
	switch (family) {
	case Family::naive:
		return "naive";
	case Family::naive2:
		return "naive2";
	case Family::ses:
		return "ses";
	case Family::holt:
		return "holt";
	case Family::holt_winters:
		return "holt_winters";
	case Family::damped:
		return "damped";
	case Family::seasonal_damped:
		return "seasonal_damped";
	}
	return "unknown";
}

Family parse_family(std::string_view name) {
	for (Family f : {Family::naive, Family::naive2, Family::ses, Family::holt, Family::holt_winters, Family::damped,
	                 Family::seasonal_damped}) {
		if (name == to_string(f)) {
			return f;
		}
	}
	if (name == "holt-winters") {
		return Family::holt_winters;
	}
	if (name == "seasonal-damped") {
		return Family::seasonal_damped;
	}
	throw std::invalid_argument("unknown forecaster family '" + std::string(name) + "'");
}

SmoothingRun run_ses(std::span<const double> y, double alpha) noexcept {
	double level = y[0];
	double sse = 0.0;
	for (double v : y) {
		const double e = v - level;
		sse += e * e;
		level += alpha * e;
	}
	return {sse, level, 0.0};
}

SmoothingRun run_damped(std::span<const double> y, double alpha, double beta, double phi) noexcept {
	double level = y[0];
	double trend = y[1] - y[0];
	double sse = 0.0;
	for (double v : y) {
		const double damped_trend = phi * trend;
		const double e = v - (level + damped_trend);
		sse += e * e;
		level += damped_trend + alpha * e;
		trend = damped_trend + beta * alpha * e;
	}
	if (!std::isfinite(sse)) {
		sse = kInf;
	}
	return {sse, level, trend};
}

FittedForecaster fit(const ForecasterSpec &spec, std::span<const double> values) {
	validate(spec);
	require_length(spec.family, values.size());
	switch (spec.family) {
	case Family::naive:
	case Family::naive2:
		return fit_naive(spec, values);
	case Family::ses:
		return fit_ses(spec, values);
	case Family::holt:
	case Family::holt_winters:
		return fit_trend(spec, Family::holt, values);
	case Family::damped:
	case Family::seasonal_damped:
		return fit_trend(spec, Family::damped, values);
	}
	throw std::invalid_argument("fit: unknown family");
}

FittedForecaster fit(const ForecasterSpec &spec, const TimeSeries &series) {
	validate(spec);
	require_length(spec.family, series.size());
	switch (spec.family) {
	case Family::naive2: {
		auto adj = adjust_seasonality(series);
		auto out = fit_naive(spec, adj.adjusted.values());
		out.applied = adj.applied() ? Family::naive2 : Family::naive;
		out.adjustment = std::move(adj.indices);
		return out;
	}
	case Family::holt_winters:
	case Family::seasonal_damped: {
		const bool damped = spec.family == Family::seasonal_damped;
		auto adj = adjust_seasonality(series);
		if (!adj.applied()) {
			return fit_trend(spec, damped ? Family::damped : Family::holt, series.values());
		}
		return fit_seasonal(spec, spec.family, series.values(), *adj.indices);
	}
	default:
		return fit(spec, series.values());
	}
}

std::vector<double> forecast(const FittedForecaster &fitted, Horizon h) {
	std::vector<double> out(h.size());
	switch (fitted.applied) {
	case Family::naive:
	case Family::ses:
		std::fill(out.begin(), out.end(), fitted.level);
		return out;
	case Family::naive2:
		std::fill(out.begin(), out.end(), fitted.level);
		if (fitted.adjustment) {
			out = reseasonalize(out, *fitted.adjustment, fitted.fitted_length + 1);
		}
		return out;
	case Family::holt:
	case Family::damped:
	case Family::holt_winters:
	case Family::seasonal_damped: {
		const double phi = fitted.params.phi;
		const bool seasonal = fitted.applied == Family::holt_winters || fitted.applied == Family::seasonal_damped;
		double power = 1.0;
		double damping_sum = 0.0;
		for (std::size_t k = 0; k < out.size(); ++k) {
			power *= phi;
			damping_sum += power;
			out[k] = fitted.level + damping_sum * fitted.trend;
			if (seasonal) {
				out[k] *= fitted.seasonal[(fitted.fitted_length + k) % fitted.seasonal.size()];
			}
		}
		return out;
	}
	}
	return out;
}

} // namespace otm
