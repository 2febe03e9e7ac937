#pragma once

#include <string>
#include <vector>

#include "noiserect/metrics.hpp"

namespace noiserect {

// Minimal CSV writing: fields containing comma, quote, CR or LF are quoted,
// quotes doubled. Numbers use shortest round-trip formatting; NaN becomes the
// not-applicable sentinel "na". Lines starting with '#' carry the header note
// explaining that the metrics are latent-space substitutes.
std::string csv_escape(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);
std::string csv_field(double value);

// One row per run: aggregate columns then per-frame cosine_i / mse_i columns.
std::string metrics_csv(const MetricReport& report);

// Long-format sweep row stream: axis,value,seed,metric,metric_value. Failed
// runs contribute a single row with metric = "error".
struct SweepRow {
    std::string axis;
    double value;
    std::uint64_t seed;
    std::string metric;
    std::string metric_value;
};

std::string sweep_rows_csv(const std::vector<SweepRow>& rows);

// Per-value aggregation of one metric across seeds.
struct SweepSummaryRow {
    std::string axis;
    double value;
    std::string metric;
    double mean;
    double stddev;  // sample stddev; NaN when count < 2
    long long count;
};

std::string sweep_summary_csv(const std::vector<SweepSummaryRow>& rows);

}  // namespace noiserect
