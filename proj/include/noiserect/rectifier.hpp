#pragma once

#include <utility>
#include <vector>

#include "noiserect/latent.hpp"

namespace noiserect {

// Per-frame rectification weights, the window over the denoising trajectory
// (as fractions of the inference step sequence), and the stored initial noise
// the gap is measured against.
struct RectifierConfig {
    std::vector<double> omega;       // length L, each in [0, 1]
    std::pair<double, double> tau;   // (start, end) fractions, 0 <= s <= e <= 1
    VideoLatent initial_noise;

    // Throws on any invariant violation.
    void validate() const;
};

// Frame-wise gap between the initial sampled noise and a prediction.
struct NoiseGap {
    VideoLatent delta;
};

NoiseGap noise_gap(const VideoLatent& n, const VideoLatent& n_pred);

// Weighted rectification: out^i = n_pred^i + w^i * delta^0 + (1 - w^i) * delta^i,
// evaluated as n_pred^i + (delta^i + w^i * (delta^0 - delta^i)) so that frame 0
// reduces to n_pred^0 + delta^0 independent of w^0.
VideoLatent rectify(const VideoLatent& n_pred, const VideoLatent& n,
                    const std::vector<double>& omega);

// Same update applied to a precomputed gap (run_reverse computes the gap once
// per step whether or not the window is active).
VideoLatent rectify_with_gap(const VideoLatent& n_pred, const VideoLatent& delta,
                             const std::vector<double>& omega);

// Window gate over the inference step sequence: step_index 0 is the first
// denoising step (t at its largest). True iff s <= step_index / K < e, so the
// end fraction 1 includes the final step.
bool in_window(int step_index, int total_steps, std::pair<double, double> tau);

// Default per-frame weight ramp: w^i = 1 - (i / (L-1)) * (1 - omega_min).
// For L = 1 the single weight is 1.
std::vector<double> omega_ramp(int frame_count, double omega_min);

}  // namespace noiserect
