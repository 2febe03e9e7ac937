#pragma once

#include <utility>

#include "noiserect/denoisers.hpp"
#include "noiserect/latent.hpp"

namespace noiserect {

// A Gaussian bump drifting over a small single-channel grid. Deliberately
// simple so exported frames visualize the motion directly and the induced
// prior stays well conditioned.
struct BlobScene {
    int height = 16;
    int width = 16;
    std::pair<double, double> center{4.0, 4.0};    // (row, col), frame 0
    std::pair<double, double> velocity{0.5, 0.5};  // per-frame drift
    double radius = 2.0;
    double amplitude = 1.0;
    double background = 0.1;

    // Throws on radius <= 0, grid smaller than 4x4, or negative levels.
    void validate() const;
};

// Renders background + amplitude * exp(-d^2 / (2 r^2)) around
// center + frame_index * velocity, sampled at pixel centers, row-major.
// Off-grid centers just render partial or empty bumps.
ImageLatent render_blob_frame(const BlobScene& scene, int frame_index);

// Single-component video prior whose frame-i mean is the rendered frame i
// and whose per-coordinate variance is sigma^2.
VideoPrior blob_prior(const BlobScene& scene, int frame_count, double sigma);

// Reference image for conditioning: a frame-0 draw from the prior.
ImageLatent sample_reference(const VideoPrior& prior, SeededRng& rng);

}  // namespace noiserect
