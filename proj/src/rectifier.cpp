#include "noiserect/rectifier.hpp"

#include <cmath>
#include <string>

namespace noiserect {

void RectifierConfig::validate() const {
    if (omega.size() != static_cast<std::size_t>(initial_noise.frame_count())) {
        throw Error::config("rectifier: omega length " + std::to_string(omega.size()) +
                            " does not match L=" + std::to_string(initial_noise.frame_count()));
    }
    for (double w : omega) {
        if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
            throw Error::config("rectifier: omega weights must lie in [0, 1]");
        }
    }
    const auto [s, e] = tau;
    if (!std::isfinite(s) || !std::isfinite(e) || s < 0.0 || e > 1.0 || s > e) {
        throw Error::config("rectifier: tau must satisfy 0 <= start <= end <= 1");
    }
}

NoiseGap noise_gap(const VideoLatent& n, const VideoLatent& n_pred) {
    n.require_same_shape(n_pred, "noise_gap");
    VideoLatent delta(n.frame_count(), n.dims());
    for (std::size_t i = 0; i < delta.data().size(); ++i) {
        delta.data()[i] = n.data()[i] - n_pred.data()[i];
    }
    return NoiseGap{std::move(delta)};
}

VideoLatent rectify_with_gap(const VideoLatent& n_pred, const VideoLatent& delta,
                             const std::vector<double>& omega) {
    n_pred.require_same_shape(delta, "rectify");
    if (omega.size() != static_cast<std::size_t>(n_pred.frame_count())) {
        throw Error::shape("rectify: omega length must equal frame count");
    }
    for (double w : omega) {
        if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
            throw Error::config("rectify: omega weights must lie in [0, 1]");
        }
    }
    const std::size_t fsize = n_pred.frame_size();
    VideoLatent out(n_pred.frame_count(), n_pred.dims());
    for (int f = 0; f < n_pred.frame_count(); ++f) {
        const double w = omega[static_cast<std::size_t>(f)];
        for (std::size_t i = 0; i < fsize; ++i) {
            const double d0 = delta.at(0, i);
            const double di = delta.at(f, i);
            out.at(f, i) = n_pred.at(f, i) + (di + w * (d0 - di));
        }
    }
    return out;
}

VideoLatent rectify(const VideoLatent& n_pred, const VideoLatent& n,
                    const std::vector<double>& omega) {
    return rectify_with_gap(n_pred, noise_gap(n, n_pred).delta, omega);
}

bool in_window(int step_index, int total_steps, std::pair<double, double> tau) {
    if (step_index < 0 || step_index >= total_steps) {
        throw Error::config("in_window: step index out of range");
    }
    const double fraction = static_cast<double>(step_index) / static_cast<double>(total_steps);
    return tau.first <= fraction && fraction < tau.second;
}

std::vector<double> omega_ramp(int frame_count, double omega_min) {
    if (frame_count < 1) {
        throw Error::config("omega_ramp: L must be >= 1");
    }
    if (!std::isfinite(omega_min) || omega_min < 0.0 || omega_min > 1.0) {
        throw Error::config("omega_ramp: omega_min must lie in [0, 1]");
    }
    std::vector<double> omega(static_cast<std::size_t>(frame_count), 1.0);
    for (int i = 1; i < frame_count; ++i) {
        omega[static_cast<std::size_t>(i)] =
            1.0 - (static_cast<double>(i) / static_cast<double>(frame_count - 1)) *
                      (1.0 - omega_min);
    }
    return omega;
}

}  // namespace noiserect
