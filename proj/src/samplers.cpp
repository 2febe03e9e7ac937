#include "noiserect/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "noiserect/vlt_io.hpp"

namespace noiserect {

void StepPlan::validate(int schedule_steps) const {
    if (inference_steps.empty()) {
        throw Error::config("StepPlan: empty");
    }
    int prev = schedule_steps + 1;
    for (int t : inference_steps) {
        if (t < 1 || t > schedule_steps) {
            throw Error::config("StepPlan: timestep " + std::to_string(t) + " outside [1, " +
                                std::to_string(schedule_steps) + "]");
        }
        if (t >= prev) {
            throw Error::config("StepPlan: timesteps must be strictly decreasing");
        }
        prev = t;
    }
}

StepPlan make_step_plan(const NoiseSchedule& schedule, int inference_count, double strength) {
    const int total = schedule.steps();
    if (!(strength > 0.0) || strength > 1.0) {
        throw Error::config("make_step_plan: strength must lie in (0, 1]");
    }
    const int t_start = std::max(1, static_cast<int>(std::lround(strength * total)));
    if (inference_count < 1 || inference_count > t_start) {
        throw Error::config("make_step_plan: K must lie in [1, " + std::to_string(t_start) + "]");
    }
    const int stride = t_start / inference_count;
    StepPlan plan;
    plan.inference_steps.reserve(static_cast<std::size_t>(inference_count));
    for (int i = 0; i < inference_count; ++i) {
        plan.inference_steps.push_back(t_start - i * stride);
    }
    plan.validate(total);
    return plan;
}

SamplerKind SamplerKind::ddim(double eta) {
    if (!std::isfinite(eta) || eta < 0.0 || eta > 1.0) {
        throw Error::config("SamplerKind: eta must lie in [0, 1]");
    }
    return SamplerKind{Kind::ddim, eta};
}

SamplerKind SamplerKind::ancestral() { return SamplerKind{Kind::ancestral, 0.0}; }

VideoLatent ddim_step(const VideoLatent& z_t, const VideoLatent& eps_hat, int t,
                      std::optional<int> t_prev, const NoiseSchedule& schedule, double eta,
                      SeededRng& rng) {
    if (!std::isfinite(eta) || eta < 0.0 || eta > 1.0) {
        throw Error::config("ddim_step: eta must lie in [0, 1]");
    }
    z_t.require_same_shape(eps_hat, "ddim_step");

    const double abar_t = schedule.alpha_bar(t);
    const double sqrt_abar_t = std::sqrt(abar_t);
    const double sqrt_resid_t = std::sqrt(1.0 - abar_t);

    VideoLatent out(z_t.frame_count(), z_t.dims());
    if (!t_prev.has_value()) {
        // Final step: return the x0 prediction.
        for (std::size_t i = 0; i < out.data().size(); ++i) {
            out.data()[i] = (z_t.data()[i] - sqrt_resid_t * eps_hat.data()[i]) / sqrt_abar_t;
        }
        return out;
    }

    if (*t_prev >= t) {
        throw Error::config("ddim_step: t_prev must be < t");
    }
    const double abar_prev = schedule.alpha_bar(*t_prev);
    const double sigma = eta * std::sqrt((1.0 - abar_prev) / (1.0 - abar_t)) *
                         std::sqrt(1.0 - abar_t / abar_prev);
    // Rounding can push the radicand a hair below zero when eta = 1.
    const double dir_coeff = std::sqrt(std::max(0.0, 1.0 - abar_prev - sigma * sigma));
    const double sqrt_abar_prev = std::sqrt(abar_prev);

    for (std::size_t i = 0; i < out.data().size(); ++i) {
        const double x0 = (z_t.data()[i] - sqrt_resid_t * eps_hat.data()[i]) / sqrt_abar_t;
        out.data()[i] = sqrt_abar_prev * x0 + dir_coeff * eps_hat.data()[i];
    }
    if (sigma > 0.0) {
        for (double& v : out.data()) {
            v += sigma * rng.normal();
        }
    }
    return out;
}

VideoLatent ancestral_step(const VideoLatent& z_t, const VideoLatent& eps_hat, int t,
                           const NoiseSchedule& schedule, SeededRng& rng) {
    z_t.require_same_shape(eps_hat, "ancestral_step");
    const double beta = schedule.beta(t);
    const double inv_sqrt_alpha = 1.0 / std::sqrt(schedule.alpha(t));
    const double eps_coeff = beta / std::sqrt(1.0 - schedule.alpha_bar(t));

    VideoLatent out(z_t.frame_count(), z_t.dims());
    for (std::size_t i = 0; i < out.data().size(); ++i) {
        out.data()[i] = inv_sqrt_alpha * (z_t.data()[i] - eps_coeff * eps_hat.data()[i]);
    }
    if (t > 1) {
        const double sd = std::sqrt(beta);
        for (double& v : out.data()) {
            v += sd * rng.normal();
        }
    }
    return out;
}

VideoLatent run_reverse(const VideoLatent& z_start, const DenoiserHandle& denoiser,
                        const RectifierConfig* rectifier, const StepPlan& plan,
                        const SamplerKind& sampler, const ConditionVector& cond,
                        const NoiseSchedule& schedule, SeededRng& rng, Trajectory* trajectory) {
    plan.validate(schedule.steps());
    if (rectifier != nullptr) {
        rectifier->validate();
        z_start.require_same_shape(rectifier->initial_noise, "run_reverse rectifier");
    }
    if (sampler.kind == SamplerKind::Kind::ancestral) {
        // Ancestral steps assume t_prev = t - 1 down to 1.
        if (plan.count() != plan.first() || plan.inference_steps.back() != 1) {
            throw Error::config("run_reverse: ancestral sampling requires the full step grid");
        }
    }

    const int total_steps = plan.count();
    VideoLatent z = z_start;
    for (int i = 0; i < total_steps; ++i) {
        const int t = plan.inference_steps[static_cast<std::size_t>(i)];
        VideoLatent eps_pred = denoiser.predict(z, cond, t);
        z.require_same_shape(eps_pred, "run_reverse denoiser output");

        VideoLatent eps_used = eps_pred;
        if (rectifier != nullptr) {
            NoiseGap gap = noise_gap(rectifier->initial_noise, eps_pred);
            if (in_window(i, total_steps, rectifier->tau)) {
                eps_used = rectify_with_gap(eps_pred, gap.delta, rectifier->omega);
            }
        }

        if (sampler.kind == SamplerKind::Kind::ddim) {
            const std::optional<int> t_prev =
                (i + 1 < total_steps)
                    ? std::optional<int>(plan.inference_steps[static_cast<std::size_t>(i + 1)])
                    : std::nullopt;
            z = ddim_step(z, eps_used, t, t_prev, schedule, sampler.eta, rng);
        } else {
            z = ancestral_step(z, eps_used, t, schedule, rng);
        }

        if (trajectory != nullptr) {
            trajectory->steps.push_back(
                TrajectoryStep{i, t, z, std::move(eps_pred), std::move(eps_used)});
        }
    }
    return z;
}

void dump_trajectory(const Trajectory& trajectory, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw Error::io("cannot create directory " + out_dir.string() + ": " + ec.message());
    }
    std::string index;
    for (const auto& step : trajectory.steps) {
        char name[32];
        std::snprintf(name, sizeof(name), "step_%03d.vlt1", step.step_index);
        write_vlt1(out_dir / name, step.latent);
        index += std::to_string(step.step_index) + " " + std::to_string(step.timestep) + " " +
                 name + "\n";
    }
    write_file_atomic(out_dir / "index.txt", index);
}

}  // namespace noiserect
