#include <string>

#include "CLI11.hpp"
#include "noiserect/commands.hpp"

namespace {

const char* kSchemaFooter = R"(File formats:
  VLT1        ASCII header "VLT1 L D C H W\n" + L*D little-endian float32, frame-major.
  manifest    one "key = value" per line, insertion-ordered.
  metrics.csv one row per run; columns: mean_cosine, mean_mse, temporal_coherence,
              motion_intensity, cosine_0..cosine_{L-1}, mse_0..mse_{L-1}.
              NaN / not-applicable values are written as "na".
  rows.csv    sweep long format; columns: axis, value, seed, metric, metric_value.
              Failed runs emit one row with metric = "error".
  summary.csv columns: axis, value, metric, mean, stddev, count (stddev is the
              sample estimate, "na" when count < 2).
  PGM         binary P5, min-max normalized over the whole video.

Environment:
  NOISERECT_OUT_ROOT  base directory for relative output paths.

Errors print one line "error: <category>: <message>" with category one of
config | shape | numeric | io (exit codes 2/3/4/5).)";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tuning-free image-to-video sampling on latent grids: noise a reference image, "
                 "then denoise with per-step noise rectification."};
    app.footer(kSchemaFooter);
    app.require_subcommand(1);

    std::string config_path;
    auto* generate = app.add_subcommand(
        "generate", "Run one configured generation and write video, reference, manifest, "
                    "metrics and frames");
    generate->add_option("config", config_path, "run config file")->required();

    std::string sweep_path;
    auto* sweep = app.add_subcommand(
        "sweep", "Run a one-axis parameter sweep and write rows.csv / summary.csv");
    sweep->add_option("spec", sweep_path, "sweep spec file (run config plus [sweep] section)")
        ->required();

    std::string eval_video, eval_reference, eval_out;
    auto* eval = app.add_subcommand("eval", "Score a video against a 1-frame reference latent");
    eval->add_option("video", eval_video, "video .vlt1")->required();
    eval->add_option("reference", eval_reference, "reference .vlt1 (1 frame)")->required();
    eval->add_option("-o,--out", eval_out, "metrics CSV path (default <video>.metrics.csv)");

    std::string export_video, export_dir;
    int export_scale = 8;
    auto* export_frames =
        app.add_subcommand("export-frames", "Write one PGM per frame of a .vlt1 video");
    export_frames->add_option("video", export_video, "video .vlt1")->required();
    export_frames->add_option("out_dir", export_dir, "output directory")->required();
    export_frames->add_option("--scale", export_scale, "integer nearest-neighbor upscale")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    if (*generate) {
        return noiserect::cmd_generate(config_path);
    }
    if (*sweep) {
        return noiserect::cmd_sweep(sweep_path);
    }
    if (*eval) {
        if (eval_out.empty()) {
            eval_out = eval_video + ".metrics.csv";
        }
        return noiserect::cmd_eval(eval_video, eval_reference, eval_out);
    }
    return noiserect::cmd_export_frames(export_video, export_dir, export_scale);
}
