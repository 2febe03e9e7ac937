#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "noiserect/latent.hpp"

namespace noiserect {

// Latent-space stand-ins for the usual pixel-space video metrics: frame-wise
// agreement with a single reference image plus two reference-free temporal
// scores of the video itself.
struct MetricReport {
    std::vector<double> frame_cosine;  // per-frame cosine vs reference, NaN if a norm is 0
    std::vector<double> frame_mse;
    double mean_cosine;         // NaN frames propagate into the mean
    double mean_mse;
    double temporal_coherence;  // NaN sentinel for L = 1
    double motion_intensity;    // NaN sentinel for L = 1
};

// Cosine similarity of two equally sized buffers; NaN when either norm is 0.
double cosine_similarity(const double* a, const double* b, std::size_t size);

// Per-frame (cosine, mse) of every frame against one reference image.
// Zero-norm frames yield NaN cosine; mse is always defined.
std::pair<std::vector<double>, std::vector<double>> fidelity(const VideoLatent& video,
                                                             const ImageLatent& reference);

// Mean cosine of adjacent frame pairs. Requires L >= 2.
double temporal_coherence(const VideoLatent& video);

// Mean adjacent-frame L2 distance normalized by sqrt(frame size), so values
// compare across grid sizes. Requires L >= 2.
double motion_intensity(const VideoLatent& video);

// Full report; single-frame videos get NaN for both temporal scores instead
// of an error so callers can still report fidelity.
MetricReport compute_metrics(const VideoLatent& video, const ImageLatent& reference);

// Spearman rank correlation with average ranks for ties; the trend statistic
// used by the sweep assertions. NaN for n < 2, mismatched sizes, or a
// constant side.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace noiserect
