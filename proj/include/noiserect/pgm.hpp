#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "noiserect/latent.hpp"

namespace noiserect {

// 8-bit binary PGM (P5) of one frame, min-max normalized with the given
// bounds and nearest-neighbor upscaled by `scale`. A degenerate range
// (lo == hi) maps everything to mid-gray.
std::string pgm_serialize(const double* frame, int height, int width, double lo, double hi,
                          int scale);

// One PGM per frame, named frame_000.pgm ..., normalized over the whole video
// so brightness changes across frames reflect real value changes. Returns the
// written paths. Single-channel videos only.
std::vector<std::filesystem::path> export_frames(const VideoLatent& video,
                                                 const std::filesystem::path& out_dir, int scale);

}  // namespace noiserect
