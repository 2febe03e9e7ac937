#include "noiserect/latent.hpp"

#include <cmath>
#include <string>

namespace noiserect {

void require_finite(const std::vector<double>& values, const char* where) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw Error::numeric(std::string(where) + ": non-finite value");
        }
    }
}

ImageLatent::ImageLatent(std::vector<double> data, LatentDims dims)
    : data_(std::move(data)), dims_(dims) {
    if (data_.size() != dims_.size()) {
        throw Error::shape("ImageLatent: data length " + std::to_string(data_.size()) +
                           " does not match dims product " + std::to_string(dims_.size()));
    }
    require_finite(data_, "ImageLatent");
}

VideoLatent::VideoLatent(int frame_count, LatentDims dims)
    : data_(static_cast<std::size_t>(frame_count) * dims.size(), 0.0),
      frame_count_(frame_count),
      frame_size_(dims.size()),
      dims_(dims) {
    if (frame_count < 1) {
        throw Error::shape("VideoLatent: frame count must be >= 1");
    }
}

VideoLatent::VideoLatent(std::vector<double> data, int frame_count, LatentDims dims)
    : data_(std::move(data)), frame_count_(frame_count), frame_size_(dims.size()), dims_(dims) {
    if (frame_count < 1) {
        throw Error::shape("VideoLatent: frame count must be >= 1");
    }
    if (data_.size() != static_cast<std::size_t>(frame_count) * frame_size_) {
        throw Error::shape("VideoLatent: data length " + std::to_string(data_.size()) +
                           " does not match " + std::to_string(frame_count) + " frames of " +
                           std::to_string(frame_size_) + " values");
    }
    require_finite(data_, "VideoLatent");
}

ImageLatent VideoLatent::frame(int index) const {
    if (index < 0 || index >= frame_count_) {
        throw Error::shape("VideoLatent::frame: index " + std::to_string(index) +
                           " out of range [0, " + std::to_string(frame_count_) + ")");
    }
    std::vector<double> out(data_.begin() + index * frame_size_,
                            data_.begin() + (index + 1) * frame_size_);
    return ImageLatent(std::move(out), dims_);
}

void VideoLatent::set_frame(int index, const ImageLatent& img) {
    if (index < 0 || index >= frame_count_) {
        throw Error::shape("VideoLatent::set_frame: index out of range");
    }
    if (img.dims() != dims_) {
        throw Error::shape("VideoLatent::set_frame: frame dims mismatch");
    }
    std::copy(img.data().begin(), img.data().end(), data_.begin() + index * frame_size_);
}

void VideoLatent::require_same_shape(const VideoLatent& other, const char* where) const {
    if (!same_shape(other)) {
        throw Error::shape(std::string(where) + ": shape mismatch (" +
                           std::to_string(frame_count_) + "x" + std::to_string(frame_size_) +
                           " vs " + std::to_string(other.frame_count_) + "x" +
                           std::to_string(other.frame_size_) + ")");
    }
}

}  // namespace noiserect
