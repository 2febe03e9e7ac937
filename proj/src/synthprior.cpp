#include "noiserect/synthprior.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "noiserect/error.hpp"

namespace noiserect {

void BlobScene::validate() const {
    if (height < 4 || width < 4) {
        throw Error::config("BlobScene: grid must be at least 4x4");
    }
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw Error::config("BlobScene: radius must be positive");
    }
    if (!(amplitude >= 0.0) || !(background >= 0.0)) {
        throw Error::config("BlobScene: amplitude and background must be non-negative");
    }
    for (double v : {center.first, center.second, velocity.first, velocity.second, amplitude,
                     background}) {
        if (!std::isfinite(v)) {
            throw Error::config("BlobScene: non-finite parameter");
        }
    }
}

ImageLatent render_blob_frame(const BlobScene& scene, int frame_index) {
    scene.validate();
    if (frame_index < 0) {
        throw Error::config("render_blob_frame: frame_index must be >= 0");
    }
    const double cr = scene.center.first + frame_index * scene.velocity.first;
    const double cc = scene.center.second + frame_index * scene.velocity.second;
    const double inv = 1.0 / (2.0 * scene.radius * scene.radius);

    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(scene.height) * scene.width);
    for (int r = 0; r < scene.height; ++r) {
        for (int c = 0; c < scene.width; ++c) {
            const double dr = r - cr;
            const double dc = c - cc;
            values.push_back(scene.background +
                             scene.amplitude * std::exp(-(dr * dr + dc * dc) * inv));
        }
    }
    return ImageLatent(std::move(values), LatentDims{1, scene.height, scene.width});
}

VideoPrior blob_prior(const BlobScene& scene, int frame_count, double sigma) {
    scene.validate();
    if (frame_count < 1) {
        throw Error::config("blob_prior: frame_count must be >= 1");
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw Error::config("blob_prior: sigma must be positive");
    }

    VideoLatent means(frame_count, LatentDims{1, scene.height, scene.width});
    for (int f = 0; f < frame_count; ++f) {
        means.set_frame(f, render_blob_frame(scene, f));
    }

    VideoPrior::Component comp{1.0, std::move(means),
                               std::vector<double>(frame_count, sigma * sigma)};
    return VideoPrior({std::move(comp)}, "blob");
}

ImageLatent sample_reference(const VideoPrior& prior, SeededRng& rng) {
    return prior.sample_frame0(rng);
}

}  // namespace noiserect
