#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace otm {

/// sMAPE in percent: (200 / h) * sum |y - f| / (|y| + |f|), a 0/0 term counts as 0.
/// Throws std::invalid_argument on empty or mismatched inputs.
double smape(std::span<const double> actuals, std::span<const double> forecasts);

/// MASE: ((n - 1) / h) * sum |y - f| / sum_{t>=2} |y_t - y_{t-1}|.
/// Empty when the in-sample series has no variation (the scale is zero).
/// Throws std::invalid_argument on mismatched inputs or n < 2.
std::optional<double> mase(std::span<const double> insample, std::span<const double> actuals,
                           std::span<const double> forecasts);

/// Mean rank of each method across series. `errors[method][series]`; lower is
/// better; tied methods share the mean of their ranks. Throws
/// std::invalid_argument for ragged rows or non-finite (missing) cells.
std::vector<double> average_ranks(const std::vector<std::vector<double>> &errors);

enum class FrequencyGroup { yearly, quarterly, monthly, other };
inline constexpr std::size_t kGroupCount = 4;

std::string_view to_string(FrequencyGroup group) noexcept;
/// Case-insensitive "yearly", "quarterly", "monthly", "other".
FrequencyGroup parse_group(std::string_view name);
/// Seasonal period and horizon conventionally used for a group.
int default_period(FrequencyGroup group) noexcept;
int default_horizon(FrequencyGroup group) noexcept;

/// Score of one (series, method) cell. A failed cell has no metrics.
struct SeriesScore {
	std::string series_id;
	std::string method;
	FrequencyGroup group = FrequencyGroup::other;
	std::optional<double> smape;
	std::optional<double> mase;
	std::optional<double> theta_hat;
	bool failed = false;
	std::string diagnostic;
	double seconds = 0.0;
};

struct GroupSummary {
	std::optional<double> mean_smape;
	std::optional<double> mean_mase;
	std::size_t scored = 0;
	std::size_t mase_undefined = 0;
	std::size_t failed = 0;
};

/// One method across the frequency groups; `all` covers every series.
struct MethodSummary {
	std::string method;
	std::array<GroupSummary, kGroupCount> groups;
	GroupSummary all;
	double minutes = 0.0;
};

struct EvaluationTable {
	std::vector<MethodSummary> rows;
	/// Per-cell scores in dataset order, methods in configuration order within a series.
	std::vector<SeriesScore> scores;
	/// Mean sMAPE rank per method (same order as `rows`); empty when some cell failed.
	std::optional<std::vector<double>> average_ranks;
};

/// Aggregates cell scores. `methods` fixes the row order; every score must
/// name one of them. Means weight each series equally and are folded in the
/// order the scores are given.
EvaluationTable tabulate(std::vector<SeriesScore> scores, std::span<const std::string> methods);

} // namespace otm
