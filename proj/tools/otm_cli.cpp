// otm: batch forecasting and evaluation with the optimised theta method.
//
//   otm synth    --count 200 --seed 7 --out corpus.csv
//   otm evaluate --data corpus.csv --methods theta,ses,otm --approaches a,d --out results/
//   otm forecast --data series.csv --method otm --approach d

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "otm/dataset.hpp"
#include "otm/experiment.hpp"
#include "otm/pipeline.hpp"

namespace {

std::vector<std::string> split_list(const std::string &text) {
	std::vector<std::string> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ',')) {
		if (!item.empty()) {
			out.push_back(item);
		}
	}
	return out;
}

struct OtmOptions {
	std::string approaches = "a,b,c,d,e,f,g,h";
	std::string costs = "se";
	std::string extrapolator = "ses";
	std::string grid;

	void attach(CLI::App &cmd) {
		cmd.add_option("--approaches,--approach", approaches, "GROE approaches a-h for OTM, comma separated")
		    ->capture_default_str();
		cmd.add_option("--cost", costs, "validation cost: se, ae, sape (comma separated for several)")
		    ->capture_default_str();
		cmd.add_option("--extrapolator", extrapolator, "theta line extrapolator: ses, holt, damped")
		    ->capture_default_str();
		cmd.add_option("--grid", grid, "theta grid override, e.g. 1,2,3 (default 1,1.5,...,5)");
	}

	otm::ThetaGrid theta_grid() const {
		if (grid.empty()) {
			return otm::ThetaGrid::standard();
		}
		std::vector<double> values;
		for (const auto &item : split_list(grid)) {
			values.push_back(std::stod(item));
		}
		return otm::ThetaGrid::from(std::move(values));
	}

	std::vector<otm::MethodSpec> otm_methods() const {
		const auto extrap = otm::ForecasterSpec::of(otm::parse_family(extrapolator));
		if (extrap.family != otm::Family::ses && extrap.family != otm::Family::holt &&
		    extrap.family != otm::Family::damped) {
			throw std::invalid_argument("--extrapolator must be ses, holt or damped");
		}
		const auto cost_list = split_list(costs);
		if (cost_list.empty()) {
			throw std::invalid_argument("--cost: no cost function given");
		}
		std::vector<otm::MethodSpec> out;
		for (const auto &c : cost_list) {
			const auto cost = otm::parse_cost(c);
			for (const auto &a : split_list(approaches)) {
				if (a.size() != 1) {
					throw std::invalid_argument("--approaches: expected single letters a-h, got '" + a + "'");
				}
				const auto approach = otm::parse_approach(a[0]);
				std::string name = fmt::format("OTM({})", otm::to_char(approach));
				if (cost_list.size() > 1) {
					name = fmt::format("OTM({},{})", otm::to_char(approach), otm::to_string(cost));
				}
				out.push_back(otm::MethodSpec::otm(approach, cost, extrap, theta_grid(), std::move(name)));
			}
		}
		return out;
	}
};

std::vector<otm::MethodSpec> build_methods(const std::vector<std::string> &names, const OtmOptions &otm_options) {
	std::vector<otm::MethodSpec> out;
	for (const auto &name : names) {
		if (name == "otm") {
			for (auto &m : otm_options.otm_methods()) {
				out.push_back(std::move(m));
			}
		} else if (name == "theta") {
			out.push_back(otm::MethodSpec::classic_theta());
		} else {
			out.push_back(otm::MethodSpec::benchmark_of(otm::parse_family(name)));
		}
	}
	if (out.empty()) {
		throw std::invalid_argument("no methods selected");
	}
	return out;
}

void write_file(const std::filesystem::path &path, auto &&writer) {
	std::ofstream out(path);
	if (!out) {
		throw std::runtime_error("cannot write '" + path.string() + "'");
	}
	writer(out);
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"Optimised theta method forecasting and M3-style evaluation"};
	app.require_subcommand(1);

	// synth
	std::size_t synth_count = 200;
	std::uint64_t synth_seed = 1;
	std::string synth_out;
	auto *synth = app.add_subcommand("synth", "write a seeded synthetic corpus in dataset format");
	synth->add_option("--count", synth_count, "number of series")->capture_default_str();
	synth->add_option("--seed", synth_seed, "random seed")->capture_default_str();
	synth->add_option("--out", synth_out, "output file")->required();

	// evaluate
	std::string eval_data;
	std::string eval_methods = "theta,naive,naive2,ses,holt-winters,seasonal-damped,otm";
	std::string eval_out = ".";
	unsigned eval_workers = 1;
	bool eval_no_timing = false;
	OtmOptions eval_otm;
	auto *evaluate = app.add_subcommand("evaluate", "forecast a dataset with several methods and score them");
	evaluate->add_option("--data", eval_data, "dataset file")->required()->check(CLI::ExistingFile);
	evaluate->add_option("--methods", eval_methods,
	                     "comma separated: theta, otm, naive, naive2, ses, holt, holt-winters, damped, "
	                     "seasonal-damped")
	    ->capture_default_str();
	evaluate->add_option("--workers", eval_workers, "worker threads (0 = all cores)")->capture_default_str();
	evaluate->add_option("--out", eval_out, "output directory")->capture_default_str();
	evaluate->add_flag("--no-timing", eval_no_timing, "omit the wall-time column from aggregate.csv");
	eval_otm.attach(*evaluate);

	// forecast
	std::string fc_data;
	std::string fc_method = "otm";
	std::string fc_out;
	unsigned fc_workers = 1;
	OtmOptions fc_otm;
	fc_otm.approaches = "d";
	auto *forecast = app.add_subcommand("forecast", "forecast every series of a file with one method");
	forecast->add_option("--data", fc_data, "dataset file (held-out actuals optional)")
	    ->required()
	    ->check(CLI::ExistingFile);
	forecast->add_option("--method", fc_method, "theta, otm or a benchmark family")->capture_default_str();
	forecast->add_option("--out", fc_out, "output file (default: standard output)");
	forecast->add_option("--workers", fc_workers, "worker threads (0 = all cores)")->capture_default_str();
	fc_otm.attach(*forecast);

	CLI11_PARSE(app, argc, argv);

	try {
		if (*synth) {
			otm::save_dataset(otm::synthesize(synth_count, synth_seed), synth_out);
			std::cerr << fmt::format("wrote {} series to {}\n", synth_count, synth_out);
		} else if (*evaluate) {
			const auto data = otm::load_dataset(eval_data);
			otm::ExperimentConfig config;
			config.methods = build_methods(split_list(eval_methods), eval_otm);
			config.workers = eval_workers;

			const auto table = otm::run_experiment(data, config);
			const std::filesystem::path dir(eval_out);
			std::filesystem::create_directories(dir);
			write_file(dir / "scores.csv", [&](std::ostream &o) { otm::write_scores(table, o); });
			write_file(dir / "aggregate.csv",
			           [&](std::ostream &o) { otm::write_aggregate(table, o, !eval_no_timing); });
			write_file(dir / "ranks.csv", [&](std::ostream &o) { otm::write_ranks(table, o); });

			for (const auto &s : table.scores) {
				if (s.failed) {
					std::cerr << fmt::format("failed: series {} method {}: {}\n", s.series_id, s.method,
					                         s.diagnostic);
				}
			}
			otm::write_aggregate(table, std::cout, !eval_no_timing);
		} else if (*forecast) {
			const auto data = otm::load_dataset(fc_data, {.allow_missing_actuals = true});
			const auto methods = build_methods({fc_method}, fc_otm);
			if (methods.size() != 1) {
				throw std::invalid_argument("forecast: select exactly one approach and one cost");
			}
			const auto results = otm::forecast_all(data, methods.front(), fc_workers);
			for (const auto &r : results) {
				if (r.forecasts.empty()) {
					std::cerr << fmt::format("failed: series {}: {}\n", r.series_id, r.diagnostic);
				}
			}
			if (fc_out.empty()) {
				otm::write_forecasts(results, std::cout);
			} else {
				write_file(fc_out, [&](std::ostream &o) { otm::write_forecasts(results, o); });
			}
		}
	} catch (const std::exception &ex) {
		std::cerr << "otm: " << ex.what() << '\n';
		return 1;
	}
	return 0;
}
