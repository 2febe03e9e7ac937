#pragma once

#include <filesystem>
#include <string>

#include "noiserect/latent.hpp"

namespace noiserect {

// Raw tensor file format "VLT1": one ASCII header line `VLT1 L D C H W`
// followed by L*D little-endian 32-bit floats, frame-major. In-memory latents
// are double precision; writing quantizes to f32, so write -> read -> write
// is byte-stable.

std::string vlt1_serialize(const VideoLatent& video);
VideoLatent vlt1_parse(std::string_view bytes);

// Atomic file variants (write-temp-then-rename).
void write_vlt1(const std::filesystem::path& path, const VideoLatent& video);
VideoLatent read_vlt1(const std::filesystem::path& path);

// Whole-file atomic text write used for manifests, CSVs and PGMs.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace noiserect
