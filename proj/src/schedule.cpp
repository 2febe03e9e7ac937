#include "noiserect/schedule.hpp"

#include <cmath>
#include <string>

namespace noiserect {

NoiseSchedule::NoiseSchedule(std::vector<double> beta) : beta_(std::move(beta)) {
    if (beta_.empty()) {
        throw Error::config("NoiseSchedule: needs at least one step");
    }
    alpha_.reserve(beta_.size());
    alpha_bar_.reserve(beta_.size());
    double running = 1.0;
    for (double b : beta_) {
        if (!std::isfinite(b) || b <= 0.0 || b >= 1.0) {
            throw Error::config("NoiseSchedule: beta must lie in (0, 1)");
        }
        const double a = 1.0 - b;
        alpha_.push_back(a);
        running *= a;
        alpha_bar_.push_back(running);
    }
}

std::size_t NoiseSchedule::check(int t) const {
    if (t < 1 || t > steps()) {
        throw Error::config("NoiseSchedule: timestep " + std::to_string(t) +
                            " outside [1, " + std::to_string(steps()) + "]");
    }
    return static_cast<std::size_t>(t - 1);
}

NoiseSchedule make_linear_schedule(int steps, double beta_start, double beta_end) {
    if (steps < 1) {
        throw Error::config("make_linear_schedule: T must be >= 1");
    }
    if (!std::isfinite(beta_start) || !std::isfinite(beta_end)) {
        throw Error::config("make_linear_schedule: non-finite beta bound");
    }
    if (beta_start <= 0.0 || beta_start > beta_end || beta_end >= 1.0) {
        throw Error::config("make_linear_schedule: need 0 < beta_start <= beta_end < 1");
    }
    std::vector<double> beta(static_cast<std::size_t>(steps));
    if (steps == 1) {
        beta[0] = beta_start;
    } else {
        for (int i = 0; i < steps; ++i) {
            beta[i] = beta_start + (beta_end - beta_start) * static_cast<double>(i) /
                                       static_cast<double>(steps - 1);
        }
    }
    return NoiseSchedule(std::move(beta));
}

VideoLatent sample_gaussian(int frame_count, LatentDims dims, SeededRng& rng) {
    if (frame_count < 1 || dims.size() < 1) {
        throw Error::shape("sample_gaussian: L and D must be >= 1");
    }
    VideoLatent out(frame_count, dims);
    for (double& v : out.data()) {
        v = rng.normal();
    }
    return out;
}

VideoLatent repeat_image(const ImageLatent& z0, int frame_count) {
    if (frame_count < 1) {
        throw Error::shape("repeat_image: L must be >= 1");
    }
    VideoLatent out(frame_count, z0.dims());
    for (int f = 0; f < frame_count; ++f) {
        std::copy(z0.data().begin(), z0.data().end(),
                  out.data().begin() + f * out.frame_size());
    }
    return out;
}

VideoLatent add_noise(const VideoLatent& z, const VideoLatent& n, int t,
                      const NoiseSchedule& schedule) {
    z.require_same_shape(n, "add_noise");
    const double abar = schedule.alpha_bar(t);
    const double signal = std::sqrt(abar);
    const double noise = std::sqrt(1.0 - abar);
    VideoLatent out(z.frame_count(), z.dims());
    const auto& zd = z.data();
    const auto& nd = n.data();
    auto& od = out.data();
    for (std::size_t i = 0; i < od.size(); ++i) {
        od[i] = signal * zd[i] + noise * nd[i];
    }
    return out;
}

}  // namespace noiserect
