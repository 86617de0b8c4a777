#include "otm/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <string_view>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace otm {

namespace {

std::string_view trim(std::string_view s) {
	while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
		s.remove_prefix(1);
	}
	while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
		s.remove_suffix(1);
	}
	return s;
}

std::vector<std::string_view> split(std::string_view line) {
	std::vector<std::string_view> out;
	std::size_t start = 0;
	while (true) {
		const auto comma = line.find(',', start);
		out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
		if (comma == std::string_view::npos) {
			break;
		}
		start = comma + 1;
	}
	return out;
}

double parse_double(std::string_view field, std::size_t line, const char *what) {
	double v = 0.0;
	const auto *end = field.data() + field.size();
	const auto [ptr, ec] = std::from_chars(field.data(), end, v);
	if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
		throw DatasetError(fmt::format("{} '{}' is not a finite number", what, field), line);
	}
	return v;
}

int parse_int(std::string_view field, std::size_t line, const char *what) {
	int v = 0;
	const auto *end = field.data() + field.size();
	const auto [ptr, ec] = std::from_chars(field.data(), end, v);
	if (field.empty() || ec != std::errc() || ptr != end) {
		throw DatasetError(fmt::format("{} '{}' is not an integer", what, field), line);
	}
	return v;
}

DatasetEntry parse_row(std::string_view line, std::size_t line_no, const DatasetReadOptions &options) {
	const auto fields = split(line);
	if (fields.size() < 6) {
		throw DatasetError("expected id,group,period,h,n followed by values", line_no);
	}
	DatasetEntry entry;
	const std::string id(fields[0]);
	if (id.empty()) {
		throw DatasetError("empty series id", line_no);
	}
	try {
		entry.group = parse_group(fields[1]);
	} catch (const std::invalid_argument &ex) {
		throw DatasetError(ex.what(), line_no);
	}
	const int period = fields[2].empty() ? default_period(entry.group) : parse_int(fields[2], line_no, "period");
	entry.horizon = fields[3].empty() ? default_horizon(entry.group) : parse_int(fields[3], line_no, "h");
	const int n = parse_int(fields[4], line_no, "n");
	if (period < 1) {
		throw DatasetError("period must be >= 1", line_no);
	}
	if (entry.horizon < 1) {
		throw DatasetError("h must be >= 1", line_no);
	}
	if (n < 2) {
		throw DatasetError("n must be >= 2", line_no);
	}

	const std::size_t values = fields.size() - 5;
	const auto un = static_cast<std::size_t>(n);
	const auto uh = static_cast<std::size_t>(entry.horizon);
	const bool insample_only = options.allow_missing_actuals && values == un;
	if (values < un) {
		throw DatasetError(fmt::format("declared n = {} but found {} values", n, values), line_no);
	}
	if (!insample_only && values != un + uh) {
		throw DatasetError(fmt::format("expected {} held-out actuals (h) but found {}", uh, values - un), line_no);
	}

	std::vector<double> y(un);
	for (std::size_t i = 0; i < un; ++i) {
		y[i] = parse_double(fields[5 + i], line_no, "value");
	}
	if (!insample_only) {
		entry.actuals.resize(uh);
		for (std::size_t i = 0; i < uh; ++i) {
			entry.actuals[i] = parse_double(fields[5 + un + i], line_no, "actual");
		}
	}
	entry.series = TimeSeries(id, std::move(y), period);
	return entry;
}

} // namespace

Dataset read_dataset(std::istream &in, const DatasetReadOptions &options) {
	Dataset data;
	std::string line;
	std::size_t line_no = 0;
	bool header_seen = false;
	while (std::getline(in, line)) {
		++line_no;
		const auto view = trim(line);
		if (!header_seen) {
			const auto fields = split(view);
			if (fields.size() < 5 || fields[0] != "id" || fields[1] != "group" || fields[2] != "period" ||
			    fields[3] != "h" || fields[4] != "n") {
				throw DatasetError(fmt::format("missing header (expected '{}')", kDatasetHeader), line_no);
			}
			header_seen = true;
			continue;
		}
		if (view.empty()) {
			continue;
		}
		data.entries.push_back(parse_row(view, line_no, options));
	}
	if (!header_seen) {
		throw DatasetError(fmt::format("missing header (expected '{}')", kDatasetHeader), 1);
	}
	return data;
}

Dataset load_dataset(const std::filesystem::path &path, const DatasetReadOptions &options) {
	std::ifstream in(path);
	if (!in) {
		throw std::runtime_error("cannot open dataset '" + path.string() + "'");
	}
	return read_dataset(in, options);
}

void write_dataset(const Dataset &data, std::ostream &out) {
	out << kDatasetHeader << '\n';
	for (const auto &e : data.entries) {
		fmt::print(out, "{},{},{},{},{}", e.series.id(), to_string(e.group), e.series.period(), e.horizon,
		           e.series.size());
		for (double v : e.series.values()) {
			fmt::print(out, ",{}", v);
		}
		for (double v : e.actuals) {
			fmt::print(out, ",{}", v);
		}
		out << '\n';
	}
}

void save_dataset(const Dataset &data, const std::filesystem::path &path) {
	std::ofstream out(path);
	if (!out) {
		throw std::runtime_error("cannot write dataset '" + path.string() + "'");
	}
	write_dataset(data, out);
}

Dataset synthesize(std::size_t count, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> unit(0.0, 1.0);
	std::normal_distribution<double> noise(0.0, 1.0);

	constexpr FrequencyGroup kCycle[] = {FrequencyGroup::yearly, FrequencyGroup::quarterly, FrequencyGroup::monthly,
	                                     FrequencyGroup::other};
	// Length ranges loosely follow the M3 corpus.
	constexpr int kMinLength[] = {14, 16, 48, 16};
	constexpr int kMaxLength[] = {41, 64, 126, 96};

	Dataset data;
	data.entries.reserve(count);
	for (std::size_t i = 0; i < count; ++i) {
		const std::size_t g = i % 4;
		const FrequencyGroup group = kCycle[g];
		const int period = default_period(group);
		const int h = default_horizon(group);
		const int n = kMinLength[g] + static_cast<int>(unit(rng) * (kMaxLength[g] - kMinLength[g] + 1));
		const int total = n + h;

		const double level = 500.0 + 4500.0 * unit(rng);
		const double slope = level * (unit(rng) - 0.35) * 0.03;
		const double amplitude = period > 1 ? 0.25 * unit(rng) : 0.0;
		const double phase = 2.0 * std::numbers::pi * unit(rng);
		const double sigma = level * (0.01 + 0.06 * unit(rng));
		const double walk_share = unit(rng);

		std::vector<double> all(static_cast<std::size_t>(total));
		double walk = 0.0;
		for (int t = 1; t <= total; ++t) {
			walk += walk_share * sigma * noise(rng);
			const double base = level + slope * t + walk + (1.0 - walk_share) * sigma * noise(rng);
			const double season =
			    1.0 + amplitude * std::sin(2.0 * std::numbers::pi * t / std::max(period, 1) + phase);
			const double v = std::max(base, 0.05 * level) * season;
			all[static_cast<std::size_t>(t - 1)] = std::round(v * 100.0) / 100.0;
		}

		DatasetEntry entry;
		entry.group = group;
		entry.horizon = h;
		entry.actuals.assign(all.begin() + n, all.end());
		all.resize(static_cast<std::size_t>(n));
		entry.series = TimeSeries(fmt::format("S{:05d}", i + 1), std::move(all), period);
		data.entries.push_back(std::move(entry));
	}
	return data;
}

} // namespace otm
