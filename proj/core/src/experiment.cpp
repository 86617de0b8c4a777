#include "otm/experiment.hpp"

#include <atomic>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace otm {

namespace {

// Runs task(i) for i in [0, count) on a pool of workers. Each index is
// processed exactly once; callers write into pre-sized slots.
template <typename Task>
void parallel_for(std::size_t count, unsigned workers, Task &&task) {
	if (workers == 0) {
		workers = std::max(1u, std::thread::hardware_concurrency());
	}
	if (workers == 1 || count <= 1) {
		for (std::size_t i = 0; i < count; ++i) {
			task(i);
		}
		return;
	}
	std::atomic<std::size_t> next{0};
	std::vector<std::jthread> pool;
	const auto spawn = std::min<std::size_t>(workers, count);
	pool.reserve(spawn);
	for (std::size_t w = 0; w < spawn; ++w) {
		pool.emplace_back([&] {
			for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
				task(i);
			}
		});
	}
}

SeriesScore score_cell(const DatasetEntry &entry, const MethodSpec &method) {
	SeriesScore score;
	score.series_id = entry.series.id();
	score.method = method.name;
	score.group = entry.group;
	try {
		const auto result = run_method(entry.series, Horizon(entry.horizon), method);
		score.seconds = result.elapsed.count();
		score.theta_hat = result.chosen_theta;
		score.diagnostic = result.diagnostic;
		score.smape = smape(entry.actuals, result.forecasts);
		score.mase = mase(entry.series.values(), entry.actuals, result.forecasts);
		if (!score.mase) {
			score.diagnostic += score.diagnostic.empty() ? "" : "; ";
			score.diagnostic += "MASE undefined (constant in-sample series)";
		}
	} catch (const std::exception &ex) {
		score.failed = true;
		score.smape.reset();
		score.mase.reset();
		score.diagnostic = ex.what();
	}
	return score;
}

std::string format_value(const std::optional<double> &v) { return v ? fmt::format("{}", *v) : std::string(); }

std::string format_mean(const std::optional<double> &v) { return v ? fmt::format("{:.6f}", *v) : std::string("NA"); }

} // namespace

EvaluationTable run_experiment(const Dataset &data, const ExperimentConfig &config) {
	if (config.methods.empty()) {
		throw std::invalid_argument("run_experiment: no methods configured");
	}
	std::vector<std::string> names;
	std::set<std::string> seen;
	for (const auto &m : config.methods) {
		if (!seen.insert(m.name).second) {
			throw std::invalid_argument("run_experiment: duplicate method name '" + m.name + "'");
		}
		names.push_back(m.name);
	}
	for (const auto &e : data.entries) {
		if (e.actuals.size() != static_cast<std::size_t>(e.horizon)) {
			throw std::invalid_argument("run_experiment: series '" + e.series.id() + "' has no held-out actuals");
		}
	}

	const std::size_t methods = config.methods.size();
	const std::size_t cells = data.entries.size() * methods;
	std::vector<SeriesScore> scores(cells);
	parallel_for(data.entries.size(), config.workers, [&](std::size_t s) {
		for (std::size_t m = 0; m < methods; ++m) {
			scores[s * methods + m] = score_cell(data.entries[s], config.methods[m]);
		}
	});
	return tabulate(std::move(scores), names);
}

std::vector<ForecastResult> forecast_all(const Dataset &data, const MethodSpec &method, unsigned workers) {
	std::vector<ForecastResult> results(data.entries.size());
	parallel_for(data.entries.size(), workers, [&](std::size_t s) {
		const auto &entry = data.entries[s];
		try {
			results[s] = run_method(entry.series, Horizon(entry.horizon), method);
		} catch (const std::exception &ex) {
			results[s].series_id = entry.series.id();
			results[s].method = method.name;
			results[s].diagnostic = ex.what();
		}
	});
	return results;
}

void write_scores(const EvaluationTable &table, std::ostream &out) {
	out << "id,method,smape,mase,theta_hat\n";
	for (const auto &s : table.scores) {
		fmt::print(out, "{},{},{},{},{}\n", s.series_id, s.method, format_value(s.smape), format_value(s.mase),
		           format_value(s.theta_hat));
	}
}

void write_aggregate(const EvaluationTable &table, std::ostream &out, bool include_timing) {
	out << "metric,method";
	for (std::size_t g = 0; g < kGroupCount; ++g) {
		out << ',' << to_string(static_cast<FrequencyGroup>(g));
	}
	out << ",All";
	if (include_timing) {
		out << ",time_min";
	}
	out << '\n';

	auto row = [&](std::string_view metric, const MethodSummary &r, auto &&cell) {
		fmt::print(out, "{},{}", metric, r.method);
		for (const auto &g : r.groups) {
			fmt::print(out, ",{}", cell(g));
		}
		fmt::print(out, ",{}", cell(r.all));
		if (include_timing) {
			fmt::print(out, ",{:.4f}", r.minutes);
		}
		out << '\n';
	};
	for (const auto &r : table.rows) {
		row("smape", r, [](const GroupSummary &g) { return format_mean(g.mean_smape); });
	}
	for (const auto &r : table.rows) {
		row("mase", r, [](const GroupSummary &g) { return format_mean(g.mean_mase); });
	}
	for (const auto &r : table.rows) {
		row("scored", r, [](const GroupSummary &g) { return std::to_string(g.scored); });
	}
	for (const auto &r : table.rows) {
		row("mase_undefined", r, [](const GroupSummary &g) { return std::to_string(g.mase_undefined); });
	}
	for (const auto &r : table.rows) {
		row("failed", r, [](const GroupSummary &g) { return std::to_string(g.failed); });
	}
}

void write_ranks(const EvaluationTable &table, std::ostream &out) {
	if (!table.average_ranks) {
		out << "# average ranks unavailable: at least one (series, method) cell has no sMAPE\n";
		return;
	}
	out << "method,average_rank\n";
	for (std::size_t i = 0; i < table.rows.size(); ++i) {
		fmt::print(out, "{},{:.6f}\n", table.rows[i].method, (*table.average_ranks)[i]);
	}
}

void write_forecasts(const std::vector<ForecastResult> &results, std::ostream &out) {
	out << "id,method,theta_hat,seasonal,forecasts\n";
	for (const auto &r : results) {
		fmt::print(out, "{},{},{},{}", r.series_id, r.method, format_value(r.chosen_theta), r.seasonal ? 1 : 0);
		for (double f : r.forecasts) {
			fmt::print(out, ",{}", f);
		}
		out << '\n';
	}
}

} // namespace otm
