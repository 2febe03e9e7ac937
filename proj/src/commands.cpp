#include "noiserect/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <map>

#include "noiserect/pgm.hpp"
#include "noiserect/vlt_io.hpp"

namespace noiserect {

namespace {

int exit_code_for(ErrorCategory category) {
    switch (category) {
        case ErrorCategory::config: return 2;
        case ErrorCategory::shape: return 3;
        case ErrorCategory::numeric: return 4;
        case ErrorCategory::io: return 5;
    }
    return 1;
}

int report_error(const std::exception& e) {
    const auto* err = dynamic_cast<const Error*>(&e);
    if (err != nullptr) {
        std::cerr << "error: " << to_string(err->category()) << ": " << err->what() << "\n";
        return exit_code_for(err->category());
    }
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
}

VideoLatent single_frame_video(const ImageLatent& image) {
    VideoLatent v(1, image.dims());
    v.set_frame(0, image);
    return v;
}

}  // namespace

std::filesystem::path resolve_out_dir(const std::filesystem::path& out_dir) {
    if (out_dir.empty()) {
        throw Error::config("run.out_dir is required");
    }
    if (out_dir.is_absolute()) {
        return out_dir;
    }
    const char* root = std::getenv(kOutRootEnvVar);
    if (root != nullptr && root[0] != '\0') {
        return std::filesystem::path(root) / out_dir;
    }
    return out_dir;
}

GenerateOutcome run_from_config(const RunConfig& cfg, Trajectory* trajectory) {
    const NoiseSchedule schedule = make_linear_schedule(cfg.T, cfg.beta_start, cfg.beta_end);
    const VideoPrior prior = cfg.prior.build(cfg.L, cfg.dims);

    DenoiserHandle denoiser = prior.component_count() == 1
                                  ? gaussian_optimal_denoiser(prior, schedule)
                                  : gmm_optimal_denoiser(prior, schedule);
    if (cfg.bias_norm != 0.0) {
        denoiser = biased_denoiser(
            std::move(denoiser),
            make_bias_direction(cfg.L, cfg.dims, cfg.bias_norm, cfg.bias_seed), cfg.bias_scaling,
            schedule);
    }

    SamplerKind sampler;
    if (cfg.sampler_kind == "ddim") {
        sampler = SamplerKind::ddim(cfg.eta);
    } else if (cfg.sampler_kind == "ancestral") {
        sampler = SamplerKind::ancestral();
    } else {
        throw Error::config("sampler.kind must be 'ddim' or 'ancestral', got '" +
                            cfg.sampler_kind + "'");
    }

    GenerateOutcome out;
    out.reference = cfg.reference.resolve(prior);
    if (!(out.reference.dims() == cfg.dims)) {
        throw Error::shape("reference image dims do not match the configured video dims");
    }

    const StepPlan plan = make_step_plan(schedule, cfg.K, cfg.strength);
    out.video = generate_video(out.reference, ConditionVector{cfg.condition}, cfg.L,
                               cfg.omega.expand(cfg.L), {cfg.tau_start, cfg.tau_end}, denoiser,
                               schedule, plan, sampler, cfg.seed, out.manifest, prior.id(),
                               trajectory);
    out.metrics = compute_metrics(out.video, out.reference);
    return out;
}

SweepOutcome run_sweep(const SweepSpec& spec) {
    SweepOutcome out;
    const std::string axis = to_string(spec.axis);

    for (double value : spec.values) {
        // metric -> finite samples across seeds, for the summary
        std::map<std::string, std::vector<double>> samples;
        for (std::uint64_t seed : spec.seeds) {
            ++out.total;
            const RunConfig cfg = apply_axis(spec.base, spec.axis, value, seed);
            try {
                const GenerateOutcome run = run_from_config(cfg);
                const std::pair<const char*, double> metrics[] = {
                    {"mean_cosine", run.metrics.mean_cosine},
                    {"mean_mse", run.metrics.mean_mse},
                    {"temporal_coherence", run.metrics.temporal_coherence},
                    {"motion_intensity", run.metrics.motion_intensity},
                };
                for (const auto& [name, v] : metrics) {
                    out.rows.push_back({axis, value, seed, name, csv_field(v)});
                    if (!std::isnan(v)) {
                        samples[name].push_back(v);
                    }
                }
            } catch (const Error& e) {
                ++out.failed;
                out.rows.push_back({axis, value, seed, "error", to_string(e.category())});
            }
        }
        for (const char* name :
             {"mean_cosine", "mean_mse", "temporal_coherence", "motion_intensity"}) {
            const auto& xs = samples[name];
            const long long n = static_cast<long long>(xs.size());
            double mean = std::numeric_limits<double>::quiet_NaN();
            double stddev = std::numeric_limits<double>::quiet_NaN();
            if (n > 0) {
                mean = 0.0;
                for (double x : xs) {
                    mean += x;
                }
                mean /= static_cast<double>(n);
                if (n > 1) {
                    double sq = 0.0;
                    for (double x : xs) {
                        sq += (x - mean) * (x - mean);
                    }
                    stddev = std::sqrt(sq / static_cast<double>(n - 1));
                }
            }
            out.summary.push_back({axis, value, name, mean, stddev, n});
        }
    }
    return out;
}

int cmd_generate(const std::filesystem::path& config_path) {
    try {
        const RunConfig cfg = load_run_config(config_path);
        const auto out_dir = resolve_out_dir(cfg.out_dir);

        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) {
            throw Error::io("cannot create " + out_dir.string() + ": " + ec.message());
        }

        Trajectory trajectory;
        GenerateOutcome out =
            run_from_config(cfg, cfg.dump_trajectory ? &trajectory : nullptr);

        out.manifest.set("artifact_video", "video.vlt1");
        out.manifest.set("artifact_reference", "reference.vlt1");
        out.manifest.set("artifact_metrics", "metrics.csv");
        out.manifest.set("artifact_frames", "frames");

        if (cfg.dump_trajectory) {
            out.manifest.set("artifact_trajectory", "trajectory");
        }

        write_vlt1(out_dir / "video.vlt1", out.video);
        write_vlt1(out_dir / "reference.vlt1", single_frame_video(out.reference));
        write_file_atomic(out_dir / "metrics.csv", metrics_csv(out.metrics));
        export_frames(out.video, out_dir / "frames", cfg.export_scale);
        if (cfg.dump_trajectory) {
            dump_trajectory(trajectory, out_dir / "trajectory");
        }
        write_file_atomic(out_dir / "manifest.txt", serialize_manifest(out.manifest));

        std::cout << "wrote " << out_dir.string() << "\n"
                  << "mean_cosine = " << csv_field(out.metrics.mean_cosine) << "\n"
                  << "mean_mse = " << csv_field(out.metrics.mean_mse) << "\n"
                  << "temporal_coherence = " << csv_field(out.metrics.temporal_coherence) << "\n"
                  << "motion_intensity = " << csv_field(out.metrics.motion_intensity) << "\n";
        return 0;
    } catch (const std::exception& e) {
        return report_error(e);
    }
}

int cmd_sweep(const std::filesystem::path& sweep_path) {
    try {
        const SweepSpec spec = load_sweep_spec(sweep_path);
        const auto out_dir = resolve_out_dir(spec.base.out_dir);

        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) {
            throw Error::io("cannot create " + out_dir.string() + ": " + ec.message());
        }

        const SweepOutcome out = run_sweep(spec);
        write_file_atomic(out_dir / "rows.csv", sweep_rows_csv(out.rows));
        write_file_atomic(out_dir / "summary.csv", sweep_summary_csv(out.summary));

        std::cout << "wrote " << (out_dir / "rows.csv").string() << " and summary.csv\n";
        for (const auto& row : out.summary) {
            if (row.metric == "mean_cosine" || row.metric == "motion_intensity") {
                std::cout << row.axis << " = " << format_double(row.value) << "  " << row.metric
                          << " = " << csv_field(row.mean) << " +- " << csv_field(row.stddev)
                          << " (n=" << row.count << ")\n";
            }
        }
        if (out.failed > 0) {
            std::cerr << "error: numeric: " << out.failed << " of " << out.total
                      << " runs failed (see rows.csv)\n";
            return 1;
        }
        return 0;
    } catch (const std::exception& e) {
        return report_error(e);
    }
}

int cmd_eval(const std::filesystem::path& video_path, const std::filesystem::path& reference_path,
             const std::filesystem::path& out_csv) {
    try {
        const VideoLatent video = read_vlt1(video_path);
        const VideoLatent ref = read_vlt1(reference_path);
        if (ref.frame_count() != 1) {
            throw Error::shape("reference must hold exactly 1 frame, has " +
                               std::to_string(ref.frame_count()));
        }
        const MetricReport report = compute_metrics(video, ref.frame(0));

        write_file_atomic(out_csv, metrics_csv(report));
        std::cout << "mean_cosine = " << csv_field(report.mean_cosine) << "\n"
                  << "mean_mse = " << csv_field(report.mean_mse) << "\n"
                  << "temporal_coherence = " << csv_field(report.temporal_coherence) << "\n"
                  << "motion_intensity = " << csv_field(report.motion_intensity) << "\n"
                  << "wrote " << out_csv.string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        return report_error(e);
    }
}

int cmd_export_frames(const std::filesystem::path& vlt_path, const std::filesystem::path& out_dir,
                      int scale) {
    try {
        const VideoLatent video = read_vlt1(vlt_path);
        const auto written = export_frames(video, out_dir, scale);
        std::cout << "wrote " << written.size() << " frames to " << out_dir.string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        return report_error(e);
    }
}

}  // namespace noiserect
