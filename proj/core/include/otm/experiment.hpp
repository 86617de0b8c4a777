#pragma once

#include <iosfwd>
#include <vector>

#include "otm/dataset.hpp"
#include "otm/metrics.hpp"
#include "otm/pipeline.hpp"

namespace otm {

struct ExperimentConfig {
	std::vector<MethodSpec> methods;
	/// Worker threads; 0 means one per hardware thread.
	unsigned workers = 1;
};

/// Forecasts every series with every method, scores against the held-out
/// actuals and aggregates per frequency group. Per-cell failures are recorded
/// in the scores and never abort the run. Results do not depend on the worker
/// count. Throws std::invalid_argument when no methods are configured or
/// method names collide.
EvaluationTable run_experiment(const Dataset &data, const ExperimentConfig &config);

/// Forecasts every series with one method; results are in dataset order.
/// A failed series yields a result with no forecasts and the error in `diagnostic`.
std::vector<ForecastResult> forecast_all(const Dataset &data, const MethodSpec &method, unsigned workers);

/// id,method,smape,mase,theta_hat (empty fields for undefined values).
void write_scores(const EvaluationTable &table, std::ostream &out);

/// metric,method,Yearly,Quarterly,Monthly,Other,All[,time_min]
/// Rows for smape and mase, then the scored / mase_undefined / failed counts.
void write_aggregate(const EvaluationTable &table, std::ostream &out, bool include_timing = true);

/// method,average_rank (sMAPE ranks over all series). Writes a comment line
/// instead when the score matrix is incomplete.
void write_ranks(const EvaluationTable &table, std::ostream &out);

/// id,method,theta_hat,seasonal,f_1,...,f_h
void write_forecasts(const std::vector<ForecastResult> &results, std::ostream &out);

} // namespace otm
