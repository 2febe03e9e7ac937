#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "noiserect/denoisers.hpp"
#include "noiserect/rectifier.hpp"
#include "noiserect/schedule.hpp"

namespace noiserect {

// Ordered list of training-grid timesteps the reverse loop visits, strictly
// decreasing, all within [1, T].
struct StepPlan {
    std::vector<int> inference_steps;

    int count() const { return static_cast<int>(inference_steps.size()); }
    int first() const { return inference_steps.front(); }

    void validate(int schedule_steps) const;
};

// K timesteps uniformly strided over [1, t_start] with the first element
// exactly t_start; t_start = round(strength * T) for SDEdit-style partial
// noising, full T by default.
StepPlan make_step_plan(const NoiseSchedule& schedule, int inference_count,
                        double strength = 1.0);

struct SamplerKind {
    enum class Kind { ddim, ancestral };

    Kind kind = Kind::ddim;
    double eta = 0.0;  // ddim only; eta = 0 is fully deterministic

    static SamplerKind ddim(double eta);
    static SamplerKind ancestral();

    std::string name() const { return kind == Kind::ddim ? "ddim" : "ancestral"; }
};

// One reverse step in x0-prediction form. t_prev = nullopt marks the final
// step and returns the predicted clean latent. eta = 0 never touches rng.
VideoLatent ddim_step(const VideoLatent& z_t, const VideoLatent& eps_hat, int t,
                      std::optional<int> t_prev, const NoiseSchedule& schedule, double eta,
                      SeededRng& rng);

// Fixed-variance ancestral step on the full grid (t_prev = t - 1); no noise
// is added at t = 1 and rng is not consumed there.
VideoLatent ancestral_step(const VideoLatent& z_t, const VideoLatent& eps_hat, int t,
                           const NoiseSchedule& schedule, SeededRng& rng);

struct TrajectoryStep {
    int step_index;
    int timestep;
    VideoLatent latent;    // state after this step
    VideoLatent eps_pred;  // raw denoiser output
    VideoLatent eps_used;  // after rectification (equal outside the window)
};

struct Trajectory {
    std::vector<TrajectoryStep> steps;
};

// The reverse-process driver: predict, optionally rectify, sample, for every
// planned step. The gap against the stored initial noise is computed at each
// step when a rectifier is attached, and applied only inside its window.
VideoLatent run_reverse(const VideoLatent& z_start, const DenoiserHandle& denoiser,
                        const RectifierConfig* rectifier, const StepPlan& plan,
                        const SamplerKind& sampler, const ConditionVector& cond,
                        const NoiseSchedule& schedule, SeededRng& rng,
                        Trajectory* trajectory = nullptr);

// Writes step_000.vlt1 ... (the post-step latents) plus index.txt with one
// "step_index timestep filename" line per step.
void dump_trajectory(const Trajectory& trajectory, const std::filesystem::path& out_dir);

}  // namespace noiserect
