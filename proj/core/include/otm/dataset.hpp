#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "otm/metrics.hpp"
#include "otm/timeseries.hpp"

namespace otm {

/// One series with its held-out actuals.
struct DatasetEntry {
	TimeSeries series;
	FrequencyGroup group = FrequencyGroup::other;
	int horizon = 1;
	std::vector<double> actuals;

	friend bool operator==(const DatasetEntry &, const DatasetEntry &) = default;
};

struct Dataset {
	std::vector<DatasetEntry> entries;

	friend bool operator==(const Dataset &, const Dataset &) = default;
};

/// A malformed dataset row; line() is 1-based (the header is line 1).
class DatasetError : public std::runtime_error {
public:
	DatasetError(const std::string &what, std::size_t line)
	    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
	std::size_t line() const noexcept { return line_; }

private:
	std::size_t line_;
};

struct DatasetReadOptions {
	/// Accept rows that carry only the in-sample values (for forecasting).
	bool allow_missing_actuals = false;
};

// Format: a header row, then one series per row
//
//   id,group,period,h,n,y_1,...,y_n,a_1,...,a_h
//
// Empty period / h fields take the group's defaults. Values are written with
// round-trip precision.
Dataset read_dataset(std::istream &in, const DatasetReadOptions &options = {});
Dataset load_dataset(const std::filesystem::path &path, const DatasetReadOptions &options = {});
void write_dataset(const Dataset &data, std::ostream &out);
void save_dataset(const Dataset &data, const std::filesystem::path &path);

inline constexpr const char *kDatasetHeader = "id,group,period,h,n,values";

/// Seeded synthetic corpus: positive series with level, trend, multiplicative
/// seasonality (quarterly and monthly groups) and noise, cycling through the
/// four frequency groups.
Dataset synthesize(std::size_t count, std::uint64_t seed);

} // namespace otm
