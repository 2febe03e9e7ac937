#pragma once

#include <filesystem>

#include "noiserect/config.hpp"
#include "noiserect/csv.hpp"
#include "noiserect/manifest.hpp"
#include "noiserect/metrics.hpp"
#include "noiserect/pipeline.hpp"

namespace noiserect {

// Relative output directories are resolved against this env var when set.
inline constexpr const char* kOutRootEnvVar = "NOISERECT_OUT_ROOT";

std::filesystem::path resolve_out_dir(const std::filesystem::path& out_dir);

// In-memory result of one configured run, before anything touches disk.
struct GenerateOutcome {
    VideoLatent video;
    ImageLatent reference;
    RunManifest manifest;
    MetricReport metrics;
};

// Assembles schedule, prior, denoiser, step plan and sampler from the config
// and runs the rectified reverse process.
GenerateOutcome run_from_config(const RunConfig& cfg, Trajectory* trajectory = nullptr);

struct SweepOutcome {
    std::vector<SweepRow> rows;
    std::vector<SweepSummaryRow> summary;
    int failed = 0;
    int total = 0;
};

// Cross product of values x seeds; failures become error rows instead of
// aborting the sweep.
SweepOutcome run_sweep(const SweepSpec& spec);

// CLI entry points: print to stdout, report errors as
// "error: <category>: <message>" on stderr, return the process exit code
// (config=2, shape=3, numeric=4, io=5).
int cmd_generate(const std::filesystem::path& config_path);
int cmd_sweep(const std::filesystem::path& sweep_path);
int cmd_eval(const std::filesystem::path& video_path, const std::filesystem::path& reference_path,
             const std::filesystem::path& out_csv);
int cmd_export_frames(const std::filesystem::path& vlt_path, const std::filesystem::path& out_dir,
                      int scale);

}  // namespace noiserect
