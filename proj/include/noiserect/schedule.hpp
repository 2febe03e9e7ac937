#pragma once

#include <vector>

#include "noiserect/latent.hpp"
#include "noiserect/rng.hpp"

namespace noiserect {

// Variance schedule over the training-grid timesteps t in {1..T}.
// alpha_bar(0) is intentionally undefined; the fully denoised state is the
// sampler's final output, not a schedule entry.
class NoiseSchedule {
public:
    NoiseSchedule(std::vector<double> beta);

    int steps() const { return static_cast<int>(beta_.size()); }

    // 1-based accessors matching the timestep convention.
    double beta(int t) const { return beta_[check(t)]; }
    double alpha(int t) const { return alpha_[check(t)]; }
    double alpha_bar(int t) const { return alpha_bar_[check(t)]; }

    const std::vector<double>& beta() const { return beta_; }
    const std::vector<double>& alpha() const { return alpha_; }
    const std::vector<double>& alpha_bar() const { return alpha_bar_; }

private:
    std::size_t check(int t) const;

    std::vector<double> beta_;
    std::vector<double> alpha_;
    std::vector<double> alpha_bar_;
};

// Linear beta ramp over T steps; beta[0] = beta_start, beta[T-1] = beta_end.
// For T = 1 the single entry is beta_start.
NoiseSchedule make_linear_schedule(int steps, double beta_start, double beta_end);

// L x D i.i.d. standard normal draw; advances rng by 2*L*D raw draws.
VideoLatent sample_gaussian(int frame_count, LatentDims dims, SeededRng& rng);

// Broadcasts one image over the temporal axis; every frame equals z0.
VideoLatent repeat_image(const ImageLatent& z0, int frame_count);

// Closed-form jump to timestep t: sqrt(abar_t) * z + sqrt(1 - abar_t) * n.
VideoLatent add_noise(const VideoLatent& z, const VideoLatent& n, int t,
                      const NoiseSchedule& schedule);

}  // namespace noiserect
