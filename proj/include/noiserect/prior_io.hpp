#pragma once

#include <filesystem>

#include "noiserect/denoisers.hpp"

namespace noiserect {

// Text serialization of a VideoPrior: a key=value file holding per-component
// weight, a means .vlt1 path (relative to the prior file), variances (one
// value broadcast over frames, or one per frame) and an optional length-D
// drift vector turning a 1-frame means file into mu^i = mu + i * drift.
//
//   components = 2
//   frames = 8
//   id = two-blobs            # optional, defaults to the file stem
//   0.weight = 0.6
//   0.means = comp0.vlt1
//   0.variances = 0.09
//   0.drift = ...             # optional, D values
//   1.weight = ...
VideoPrior load_video_prior(const std::filesystem::path& path);

// Writes the text file plus one "<stem>_comp<k>.vlt1" means file per
// component next to it.
void save_video_prior(const VideoPrior& prior, const std::filesystem::path& path);

}  // namespace noiserect
