#pragma once

#include <cstdint>
#include <string>

#include "noiserect/manifest.hpp"
#include "noiserect/samplers.hpp"

namespace noiserect {

// The end-to-end image-to-video procedure: draw the initial noise once, noise
// the repeated reference up to the plan's first timestep, then run the
// rectified reverse process. The initial noise is the first rng consumption,
// so toggling the window cannot perturb any downstream draw.
//
// `manifest` is filled with the run configuration before sampling starts and
// with the output hash on success; on error the failure cause is recorded in
// it before the exception propagates.
VideoLatent generate_video(const ImageLatent& z0, const ConditionVector& cond, int frame_count,
                           const std::vector<double>& omega, std::pair<double, double> tau,
                           const DenoiserHandle& denoiser, const NoiseSchedule& schedule,
                           const StepPlan& plan, const SamplerKind& sampler, std::uint64_t seed,
                           RunManifest& manifest, const std::string& prior_id = "",
                           Trajectory* trajectory = nullptr);

}  // namespace noiserect
