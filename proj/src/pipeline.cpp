#include "noiserect/pipeline.hpp"

#include "noiserect/hash.hpp"
#include "noiserect/vlt_io.hpp"

namespace noiserect {

VideoLatent generate_video(const ImageLatent& z0, const ConditionVector& cond, int frame_count,
                           const std::vector<double>& omega, std::pair<double, double> tau,
                           const DenoiserHandle& denoiser, const NoiseSchedule& schedule,
                           const StepPlan& plan, const SamplerKind& sampler, std::uint64_t seed,
                           RunManifest& manifest, const std::string& prior_id,
                           Trajectory* trajectory) {
    manifest.set("status", "pending");
    manifest.set_uint("seed", seed);
    manifest.set_int("T", schedule.steps());
    manifest.set_double("beta_1", schedule.beta(1));
    manifest.set_double("beta_T", schedule.beta(schedule.steps()));
    manifest.set_int("K", plan.count());
    manifest.set_int("t_start", plan.inference_steps.empty() ? 0 : plan.first());
    manifest.set("sampler", sampler.name());
    manifest.set_double("eta", sampler.eta);
    manifest.set_int("L", frame_count);
    manifest.set_int("D", static_cast<long long>(z0.size()));
    manifest.set_int("C", z0.dims().channels);
    manifest.set_int("H", z0.dims().height);
    manifest.set_int("W", z0.dims().width);
    manifest.set("omega", format_double_list(omega));
    manifest.set("tau", format_double(tau.first) + " " + format_double(tau.second));
    manifest.set("condition", format_double_list(cond.values));
    manifest.set("denoiser", denoiser.id);
    manifest.set("prior", prior_id.empty() ? "none" : prior_id);

    try {
        if (frame_count < 1) {
            throw Error::config("generate_video: L must be >= 1");
        }
        plan.validate(schedule.steps());

        SeededRng rng(seed);
        VideoLatent n = sample_gaussian(frame_count, z0.dims(), rng);

        RectifierConfig rectifier{omega, tau, std::move(n)};
        rectifier.validate();

        const VideoLatent repeated = repeat_image(z0, frame_count);
        const VideoLatent z_start =
            add_noise(repeated, rectifier.initial_noise, plan.first(), schedule);

        VideoLatent video = run_reverse(z_start, denoiser, &rectifier, plan, sampler, cond,
                                        schedule, rng, trajectory);

        manifest.set("video_hash", "fnv1a64:" + fnv1a64_hex(vlt1_serialize(video)));
        manifest.set("status", "ok");
        return video;
    } catch (const Error& e) {
        manifest.set("status", "error");
        manifest.set("error_category", to_string(e.category()));
        manifest.set("error", e.what());
        throw;
    } catch (const std::exception& e) {
        manifest.set("status", "error");
        manifest.set("error_category", "numeric");
        manifest.set("error", e.what());
        throw;
    }
}

}  // namespace noiserect
