#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "otm/smoothing.hpp"
#include "otm/timeseries.hpp"

namespace otm {

/// Per-prediction validation cost g(a, b).
enum class CostKind { se, ae, sape };

std::string_view to_string(CostKind kind) noexcept;
CostKind parse_cost(std::string_view name);

/// SE = (a - b)^2, AE = |a - b|, sAPE = 2|a - b| / (|a| + |b|) with sAPE(0, 0) = 0.
double cost(CostKind kind, double a, double b) noexcept;

/// Generalised rolling origin schedule: p origins n1, n1 + m, ..., each
/// followed by up to H predictions.
struct GroeConfig {
	int p = 1;
	int m = 1;
	int H = 1;
	int n1 = 2;

	friend bool operator==(const GroeConfig &, const GroeConfig &) = default;
};

/// 1 + floor((n - n1) / m). Throws std::domain_error unless 1 < n1 < n and m >= 1.
int p_max(int n, int n1, int m);

/// Throws std::domain_error when the config is not valid for a series of length n.
void validate(const GroeConfig &config, int n);

/// (n1, n1 + m, ..., n1 + (p - 1) m).
std::vector<int> origin_schedule(const GroeConfig &config, int n);

/// Produces `horizon` forecasts from a training prefix.
using Candidate = std::function<std::vector<double>(std::span<const double> prefix, Horizon horizon)>;

/// Raised when a candidate fails on one of the training prefixes.
class EvaluationError : public std::runtime_error {
public:
	EvaluationError(const std::string &what, int origin) : std::runtime_error(what), origin_(origin) {}
	/// Origin n_i at which the candidate failed, or 0 when not tied to one origin.
	int origin() const noexcept { return origin_; }

private:
	int origin_;
};

/// sum_i sum_{j=1}^{min(H, n - n_i)} g(y[n_i + j], forecast_j fitted on y[1..n_i]).
double groe_loss(std::span<const double> values, const Candidate &candidate, const GroeConfig &config,
                 CostKind cost_kind);

/// The eight validation schemes (a)-(h) keyed by the first origin, the origin
/// step and the number of origins.
enum class Approach { a, b, c, d, e, f, g, h };

char to_char(Approach approach) noexcept;
/// Accepts 'a'..'h' (either case).
Approach parse_approach(char c);
inline constexpr Approach kAllApproaches[] = {Approach::a, Approach::b, Approach::c, Approach::d,
                                              Approach::e, Approach::f, Approach::g, Approach::h};

/// Schedule for an approach, after clamping n1 to at least 4 and p to
/// min(p, p_max, h). Throws std::domain_error if n <= h. The result can still
/// have n1 >= n for tiny series; callers check with validate().
GroeConfig approach_config(Approach approach, int n, Horizon h);

/// Candidate theta values, ascending and >= 1.
struct ThetaGrid {
	std::vector<double> candidates;

	/// {1, 1.5, ..., 5}.
	static ThetaGrid standard();
	/// Throws std::invalid_argument if empty, unsorted, or below 1.
	static ThetaGrid from(std::vector<double> values);
};

struct ThetaEstimate {
	double theta = 1.0;
	/// Loss per grid candidate (infinity for candidates that failed).
	std::vector<double> losses;
};

/// Brute-force minimum of the GROE loss of the optimised-theta forecaster over
/// the grid. Ties go to the smallest theta. Throws EvaluationError when every
/// candidate fails.
ThetaEstimate estimate_theta_detailed(std::span<const double> values, const ThetaGrid &grid,
                                      const GroeConfig &config, CostKind cost_kind,
                                      const ForecasterSpec &extrapolator);
double estimate_theta(std::span<const double> values, const ThetaGrid &grid, const GroeConfig &config,
                      CostKind cost_kind, const ForecasterSpec &extrapolator);
double estimate_theta(const TimeSeries &series, const ThetaGrid &grid, const GroeConfig &config, CostKind cost_kind,
                      const ForecasterSpec &extrapolator);

} // namespace otm
