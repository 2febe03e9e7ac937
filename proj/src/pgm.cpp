#include "noiserect/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "noiserect/error.hpp"
#include "noiserect/vlt_io.hpp"

namespace noiserect {

std::string pgm_serialize(const double* frame, int height, int width, double lo, double hi,
                          int scale) {
    if (height < 1 || width < 1 || scale < 1) {
        throw Error::config("pgm_serialize: non-positive dimensions or scale");
    }
    const int out_h = height * scale;
    const int out_w = width * scale;

    std::string out = "P5\n" + std::to_string(out_w) + " " + std::to_string(out_h) + "\n255\n";
    out.reserve(out.size() + static_cast<std::size_t>(out_h) * out_w);

    const double range = hi - lo;
    for (int r = 0; r < out_h; ++r) {
        const double* row = frame + static_cast<std::size_t>(r / scale) * width;
        for (int c = 0; c < out_w; ++c) {
            unsigned char byte = 128;
            if (range > 0.0) {
                const double v = (row[c / scale] - lo) / range;
                byte = static_cast<unsigned char>(
                    std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
            }
            out.push_back(static_cast<char>(byte));
        }
    }
    return out;
}

std::vector<std::filesystem::path> export_frames(const VideoLatent& video,
                                                 const std::filesystem::path& out_dir,
                                                 int scale) {
    if (video.dims().channels != 1) {
        throw Error::config("export_frames: only single-channel videos are supported");
    }
    if (video.frame_count() < 1) {
        throw Error::shape("export_frames: empty video");
    }

    const auto [lo_it, hi_it] = std::minmax_element(video.data().begin(), video.data().end());
    const double lo = *lo_it;
    const double hi = *hi_it;

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw Error::io("cannot create directory " + out_dir.string() + ": " + ec.message());
    }

    std::vector<std::filesystem::path> written;
    for (int f = 0; f < video.frame_count(); ++f) {
        char name[32];
        std::snprintf(name, sizeof(name), "frame_%03d.pgm", f);
        const auto path = out_dir / name;
        write_file_atomic(path, pgm_serialize(video.frame_data(f), video.dims().height,
                                              video.dims().width, lo, hi, scale));
        written.push_back(path);
    }
    return written;
}

}  // namespace noiserect
