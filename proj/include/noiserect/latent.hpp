#pragma once

#include <cstddef>
#include <vector>

#include "noiserect/error.hpp"
#include "noiserect/rng.hpp"

namespace noiserect {

// Flattened C x H x W grid layout shared by images and video frames.
struct LatentDims {
    int channels = 1;
    int height = 1;
    int width = 1;

    std::size_t size() const {
        return static_cast<std::size_t>(channels) * static_cast<std::size_t>(height) *
               static_cast<std::size_t>(width);
    }

    bool operator==(const LatentDims&) const = default;
};

// Single latent frame: D real values, row-major within each channel.
class ImageLatent {
public:
    ImageLatent() = default;
    ImageLatent(std::vector<double> data, LatentDims dims);

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }
    const LatentDims& dims() const { return dims_; }
    std::size_t size() const { return data_.size(); }

    double operator[](std::size_t i) const { return data_[i]; }
    double& operator[](std::size_t i) { return data_[i]; }

private:
    std::vector<double> data_;
    LatentDims dims_;
};

// L-frame stack of equal-shape latent vectors; the object every sampler and
// the rectifier transform. Frames are stored contiguously, frame-major.
class VideoLatent {
public:
    VideoLatent() = default;
    VideoLatent(int frame_count, LatentDims dims);
    VideoLatent(std::vector<double> data, int frame_count, LatentDims dims);

    int frame_count() const { return frame_count_; }
    std::size_t frame_size() const { return frame_size_; }
    const LatentDims& dims() const { return dims_; }
    std::size_t total_size() const { return data_.size(); }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    double at(int frame, std::size_t i) const { return data_[frame * frame_size_ + i]; }
    double& at(int frame, std::size_t i) { return data_[frame * frame_size_ + i]; }

    ImageLatent frame(int index) const;
    void set_frame(int index, const ImageLatent& img);

    const double* frame_data(int index) const {
        return data_.data() + static_cast<std::size_t>(index) * frame_size_;
    }

    bool same_shape(const VideoLatent& other) const {
        return frame_count_ == other.frame_count_ && dims_ == other.dims_;
    }

    // Throws ErrorCategory::shape when the two latents disagree.
    void require_same_shape(const VideoLatent& other, const char* where) const;

private:
    std::vector<double> data_;
    int frame_count_ = 0;
    std::size_t frame_size_ = 0;
    LatentDims dims_;
};

// Rejects non-finite entries; every constructor above calls this.
void require_finite(const std::vector<double>& values, const char* where);

}  // namespace noiserect
