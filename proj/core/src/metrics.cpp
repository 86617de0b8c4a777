#include "otm/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace otm {

double smape(std::span<const double> actuals, std::span<const double> forecasts) {
	if (actuals.size() != forecasts.size()) {
		throw std::invalid_argument("smape: actuals and forecasts differ in length");
	}
	if (actuals.empty()) {
		throw std::invalid_argument("smape: empty horizon");
	}
	double sum = 0.0;
	for (std::size_t i = 0; i < actuals.size(); ++i) {
		const double scale = std::abs(actuals[i]) + std::abs(forecasts[i]);
		if (scale > 0.0) {
			sum += std::abs(actuals[i] - forecasts[i]) / scale;
		}
	}
	return 200.0 * sum / static_cast<double>(actuals.size());
}

std::optional<double> mase(std::span<const double> insample, std::span<const double> actuals,
                           std::span<const double> forecasts) {
	if (actuals.size() != forecasts.size()) {
		throw std::invalid_argument("mase: actuals and forecasts differ in length");
	}
	if (actuals.empty()) {
		throw std::invalid_argument("mase: empty horizon");
	}
	if (insample.size() < 2) {
		throw std::invalid_argument("mase: in-sample series needs at least 2 observations");
	}
	double scale = 0.0;
	for (std::size_t t = 1; t < insample.size(); ++t) {
		scale += std::abs(insample[t] - insample[t - 1]);
	}
	if (!(scale > 0.0)) {
		return std::nullopt;
	}
	double abs_error = 0.0;
	for (std::size_t i = 0; i < actuals.size(); ++i) {
		abs_error += std::abs(actuals[i] - forecasts[i]);
	}
	const double n_minus_1 = static_cast<double>(insample.size() - 1);
	return (n_minus_1 / static_cast<double>(actuals.size())) * (abs_error / scale);
}

std::vector<double> average_ranks(const std::vector<std::vector<double>> &errors) {
	const std::size_t methods = errors.size();
	if (methods == 0) {
		return {};
	}
	const std::size_t series = errors.front().size();
	for (const auto &row : errors) {
		if (row.size() != series) {
			throw std::invalid_argument("average_ranks: every method needs a score for every series");
		}
		for (double v : row) {
			if (!std::isfinite(v)) {
				throw std::invalid_argument("average_ranks: missing or non-finite score");
			}
		}
	}

	std::vector<double> rank_sum(methods, 0.0);
	std::vector<std::size_t> order(methods);
	for (std::size_t s = 0; s < series; ++s) {
		std::iota(order.begin(), order.end(), 0);
		std::stable_sort(order.begin(), order.end(),
		                 [&](std::size_t a, std::size_t b) { return errors[a][s] < errors[b][s]; });
		std::size_t i = 0;
		while (i < methods) {
			std::size_t j = i;
			while (j + 1 < methods && errors[order[j + 1]][s] == errors[order[i]][s]) {
				++j;
			}
			// Positions i..j are tied; ranks are 1-based.
			const double shared = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
			for (std::size_t k = i; k <= j; ++k) {
				rank_sum[order[k]] += shared;
			}
			i = j + 1;
		}
	}
	std::vector<double> out(methods);
	for (std::size_t mth = 0; mth < methods; ++mth) {
		out[mth] = series == 0 ? 0.0 : rank_sum[mth] / static_cast<double>(series);
	}
	return out;
}

std::string_view to_string(FrequencyGroup group) noexcept {
	switch (group) {
	case FrequencyGroup::yearly:
		return "Yearly";
	case FrequencyGroup::quarterly:
		return "Quarterly";
	case FrequencyGroup::monthly:
		return "Monthly";
	case FrequencyGroup::other:
		return "Other";
	}
	return "Other";
}

FrequencyGroup parse_group(std::string_view name) {
	std::string lower(name);
	std::transform(lower.begin(), lower.end(), lower.begin(),
	               [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
	if (lower == "yearly") {
		return FrequencyGroup::yearly;
	}
	if (lower == "quarterly") {
		return FrequencyGroup::quarterly;
	}
	if (lower == "monthly") {
		return FrequencyGroup::monthly;
	}
	if (lower == "other") {
		return FrequencyGroup::other;
	}
	throw std::invalid_argument("unknown frequency group '" + std::string(name) + "'");
}

int default_period(FrequencyGroup group) noexcept {
	switch (group) {
	case FrequencyGroup::quarterly:
		return 4;
	case FrequencyGroup::monthly:
		return 12;
	default:
		return 1;
	}
}

int default_horizon(FrequencyGroup group) noexcept {
	switch (group) {
	case FrequencyGroup::yearly:
		return 6;
	case FrequencyGroup::quarterly:
		return 8;
	case FrequencyGroup::monthly:
		return 18;
	case FrequencyGroup::other:
		return 8;
	}
	return 8;
}

namespace {

struct Accumulator {
	double smape_sum = 0.0;
	double mase_sum = 0.0;
	std::size_t smape_count = 0;
	std::size_t mase_count = 0;
	std::size_t mase_undefined = 0;
	std::size_t failed = 0;

	void add(const SeriesScore &s) {
		if (s.failed) {
			++failed;
			return;
		}
		if (s.smape) {
			smape_sum += *s.smape;
			++smape_count;
		}
		if (s.mase) {
			mase_sum += *s.mase;
			++mase_count;
		} else {
			++mase_undefined;
		}
	}

	GroupSummary summary() const {
		GroupSummary g;
		if (smape_count > 0) {
			g.mean_smape = smape_sum / static_cast<double>(smape_count);
		}
		if (mase_count > 0) {
			g.mean_mase = mase_sum / static_cast<double>(mase_count);
		}
		g.scored = smape_count;
		g.mase_undefined = mase_undefined;
		g.failed = failed;
		return g;
	}
};

} // namespace

EvaluationTable tabulate(std::vector<SeriesScore> scores, std::span<const std::string> methods) {
	std::unordered_map<std::string, std::size_t> row_of;
	for (std::size_t i = 0; i < methods.size(); ++i) {
		if (!row_of.emplace(methods[i], i).second) {
			throw std::invalid_argument("tabulate: duplicate method name '" + methods[i] + "'");
		}
	}

	struct RowAcc {
		std::array<Accumulator, kGroupCount> groups;
		Accumulator all;
		double seconds = 0.0;
	};
	std::vector<RowAcc> acc(methods.size());
	// Per-method sMAPE column, in the order series first appear.
	std::vector<std::vector<double>> rank_input(methods.size());
	bool complete = true;

	for (const auto &s : scores) {
		const auto it = row_of.find(s.method);
		if (it == row_of.end()) {
			throw std::invalid_argument("tabulate: score for unknown method '" + s.method + "'");
		}
		auto &row = acc[it->second];
		row.groups[static_cast<std::size_t>(s.group)].add(s);
		row.all.add(s);
		row.seconds += s.seconds;
		if (s.failed || !s.smape) {
			complete = false;
		} else {
			rank_input[it->second].push_back(*s.smape);
		}
	}

	EvaluationTable table;
	table.rows.reserve(methods.size());
	for (std::size_t i = 0; i < methods.size(); ++i) {
		MethodSummary row;
		row.method = methods[i];
		for (std::size_t g = 0; g < kGroupCount; ++g) {
			row.groups[g] = acc[i].groups[g].summary();
		}
		row.all = acc[i].all.summary();
		row.minutes = acc[i].seconds / 60.0;
		table.rows.push_back(std::move(row));
	}
	if (complete && !methods.empty()) {
		const std::size_t count = rank_input.front().size();
		const bool rectangular = std::all_of(rank_input.begin(), rank_input.end(),
		                                     [count](const auto &r) { return r.size() == count; });
		if (rectangular && count > 0) {
			table.average_ranks = average_ranks(rank_input);
		}
	}
	table.scores = std::move(scores);
	return table;
}

} // namespace otm
