#include "noiserect/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "noiserect/error.hpp"

namespace noiserect {

namespace {

double adjacent_cosine_mean(const VideoLatent& video) {
    const int L = video.frame_count();
    const std::size_t D = video.frame_size();
    double sum = 0.0;
    for (int f = 0; f + 1 < L; ++f) {
        sum += cosine_similarity(video.frame_data(f), video.frame_data(f + 1), D);
    }
    return sum / (L - 1);
}

double adjacent_distance_mean(const VideoLatent& video) {
    const int L = video.frame_count();
    const std::size_t D = video.frame_size();
    const double scale = std::sqrt(static_cast<double>(D));
    double sum = 0.0;
    for (int f = 0; f + 1 < L; ++f) {
        const double* a = video.frame_data(f);
        const double* b = video.frame_data(f + 1);
        double sq = 0.0;
        for (std::size_t i = 0; i < D; ++i) {
            const double d = b[i] - a[i];
            sq += d * d;
        }
        sum += std::sqrt(sq) / scale;
    }
    return sum / (L - 1);
}

}  // namespace

double cosine_similarity(const double* a, const double* b, std::size_t size) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::pair<std::vector<double>, std::vector<double>> fidelity(const VideoLatent& video,
                                                             const ImageLatent& reference) {
    if (!(video.dims() == reference.dims())) {
        throw Error::shape("fidelity: reference dims do not match video frames");
    }
    const int L = video.frame_count();
    const std::size_t D = video.frame_size();
    const double* ref = reference.data().data();

    std::vector<double> cosine, mse;
    cosine.reserve(L);
    mse.reserve(L);
    for (int f = 0; f < L; ++f) {
        const double* a = video.frame_data(f);
        cosine.push_back(cosine_similarity(a, ref, D));
        double sq = 0.0;
        for (std::size_t i = 0; i < D; ++i) {
            const double d = a[i] - ref[i];
            sq += d * d;
        }
        mse.push_back(sq / static_cast<double>(D));
    }
    return {std::move(cosine), std::move(mse)};
}

double temporal_coherence(const VideoLatent& video) {
    if (video.frame_count() < 2) {
        throw Error::shape("temporal_coherence: need at least 2 frames");
    }
    return adjacent_cosine_mean(video);
}

double motion_intensity(const VideoLatent& video) {
    if (video.frame_count() < 2) {
        throw Error::shape("motion_intensity: need at least 2 frames");
    }
    return adjacent_distance_mean(video);
}

MetricReport compute_metrics(const VideoLatent& video, const ImageLatent& reference) {
    MetricReport report;
    std::tie(report.frame_cosine, report.frame_mse) = fidelity(video, reference);

    const int L = video.frame_count();
    double cos_sum = 0.0, mse_sum = 0.0;
    for (int f = 0; f < L; ++f) {
        cos_sum += report.frame_cosine[f];
        mse_sum += report.frame_mse[f];
    }
    report.mean_cosine = cos_sum / L;
    report.mean_mse = mse_sum / L;
    if (L >= 2) {
        report.temporal_coherence = adjacent_cosine_mean(video);
        report.motion_intensity = adjacent_distance_mean(video);
    } else {
        report.temporal_coherence = std::numeric_limits<double>::quiet_NaN();
        report.motion_intensity = std::numeric_limits<double>::quiet_NaN();
    }
    return report;
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) {
            ++j;
        }
        const double rank = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = rank;
        }
        i = j + 1;
    }
    return ranks;
}

}  // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const std::vector<double> rx = average_ranks(x);
    const std::vector<double> ry = average_ranks(y);

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= n;
    my /= n;

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = rx[i] - mx;
        const double dy = ry[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace noiserect
