#include "noiserect/csv.hpp"

#include <cmath>

#include "noiserect/manifest.hpp"

namespace noiserect {

namespace {

const char* kSubstituteNote =
    "# latent-space substitute metrics: fidelity = cosine/MSE of each frame vs the reference "
    "image; temporal coherence = mean adjacent-frame cosine; motion intensity = mean "
    "adjacent-frame L2 / sqrt(D). Not comparable to embedding-based scores.\n";

}  // namespace

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += csv_escape(fields[i]);
    }
    out += '\n';
    return out;
}

std::string csv_field(double value) {
    if (std::isnan(value)) {
        return "na";
    }
    return format_double(value);
}

std::string metrics_csv(const MetricReport& report) {
    std::string out = kSubstituteNote;

    std::vector<std::string> header = {"mean_cosine", "mean_mse", "temporal_coherence",
                                       "motion_intensity"};
    std::vector<std::string> row = {csv_field(report.mean_cosine), csv_field(report.mean_mse),
                                    csv_field(report.temporal_coherence),
                                    csv_field(report.motion_intensity)};
    for (std::size_t f = 0; f < report.frame_cosine.size(); ++f) {
        header.push_back("cosine_" + std::to_string(f));
        row.push_back(csv_field(report.frame_cosine[f]));
    }
    for (std::size_t f = 0; f < report.frame_mse.size(); ++f) {
        header.push_back("mse_" + std::to_string(f));
        row.push_back(csv_field(report.frame_mse[f]));
    }
    out += csv_row(header);
    out += csv_row(row);
    return out;
}

std::string sweep_rows_csv(const std::vector<SweepRow>& rows) {
    std::string out = kSubstituteNote;
    out += csv_row({"axis", "value", "seed", "metric", "metric_value"});
    for (const auto& r : rows) {
        out += csv_row(
            {r.axis, format_double(r.value), std::to_string(r.seed), r.metric, r.metric_value});
    }
    return out;
}

std::string sweep_summary_csv(const std::vector<SweepSummaryRow>& rows) {
    std::string out = kSubstituteNote;
    out += csv_row({"axis", "value", "metric", "mean", "stddev", "count"});
    for (const auto& r : rows) {
        out += csv_row({r.axis, format_double(r.value), r.metric, csv_field(r.mean),
                        csv_field(r.stddev), std::to_string(r.count)});
    }
    return out;
}

}  // namespace noiserect
