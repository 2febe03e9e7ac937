#include <cmath>
#include <vector>

#include "doctest.h"
#include "noiserect/metrics.hpp"
#include "noiserect/schedule.hpp"

using namespace noiserect;

namespace {

const LatentDims kPair{1, 1, 2};

}  // namespace

TEST_CASE("cosine_similarity: hand values and degenerate inputs") {
    const double a[2] = {1.0, 0.0};
    const double b[2] = {1.0, 1.0};
    CHECK(cosine_similarity(a, b, 2) == doctest::Approx(0.7071067811865476).epsilon(1e-15));

    const double c[2] = {2.0, 0.0};
    CHECK(cosine_similarity(a, c, 2) == doctest::Approx(1.0).epsilon(1e-15));

    const double d[2] = {-3.0, 0.0};
    CHECK(cosine_similarity(a, d, 2) == doctest::Approx(-1.0).epsilon(1e-15));

    const double zero[2] = {0.0, 0.0};
    CHECK(std::isnan(cosine_similarity(a, zero, 2)));
    CHECK(std::isnan(cosine_similarity(zero, zero, 2)));
}

TEST_CASE("fidelity: per-frame cosine and mse against one reference") {
    const ImageLatent ref({1.0, 0.0}, kPair);
    const VideoLatent video({1.0, 0.0,     // identical
                             1.0, 1.0,     // 45 degrees off
                             0.0, 0.0,     // zero frame
                             -2.0, 0.0},   // opposite, scaled
                            4, kPair);

    const auto [cosine, mse] = fidelity(video, ref);
    REQUIRE(cosine.size() == 4);
    REQUIRE(mse.size() == 4);
    CHECK(cosine[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cosine[1] == doctest::Approx(0.7071067811865476).epsilon(1e-15));
    CHECK(std::isnan(cosine[2]));
    CHECK(cosine[3] == doctest::Approx(-1.0).epsilon(1e-15));

    CHECK(mse[0] == 0.0);
    CHECK(mse[1] == doctest::Approx(0.5).epsilon(1e-15));   // (0 + 1) / 2
    CHECK(mse[2] == doctest::Approx(0.5).epsilon(1e-15));   // (1 + 0) / 2
    CHECK(mse[3] == doctest::Approx(4.5).epsilon(1e-15));   // (9 + 0) / 2

    SUBCASE("reference dims must match") {
        const ImageLatent wrong({1.0, 0.0, 0.0}, LatentDims{1, 1, 3});
        CHECK_THROWS_AS(fidelity(video, wrong), Error);
    }
}

TEST_CASE("fidelity cosine is scale-invariant, mse is not") {
    const ImageLatent ref({3.0, 4.0}, kPair);
    VideoLatent video({6.0, 8.0}, 1, kPair);
    const auto [cos1, mse1] = fidelity(video, ref);
    CHECK(cos1[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(mse1[0] == doctest::Approx((9.0 + 16.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("temporal_coherence: adjacent-frame cosine average") {
    // frames: e0, e0, e1 -> pairs cos(1), cos(0) -> mean 0.5
    const VideoLatent video({1.0, 0.0, 1.0, 0.0, 0.0, 1.0}, 3, kPair);
    CHECK(temporal_coherence(video) == doctest::Approx(0.5).epsilon(1e-15));

    SUBCASE("identical frames give exactly 1") {
        const VideoLatent still({2.0, 3.0, 2.0, 3.0}, 2, kPair);
        CHECK(temporal_coherence(still) == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("single frame is an error") {
        const VideoLatent one(1, kPair);
        CHECK_THROWS_AS(temporal_coherence(one), Error);
    }
}

TEST_CASE("motion_intensity: adjacent-frame distance normalized by sqrt(D)") {
    // two frames differing by (1, 1): distance sqrt(2), normalized by sqrt(2)
    const VideoLatent video({0.0, 0.0, 1.0, 1.0}, 2, kPair);
    CHECK(motion_intensity(video) == doctest::Approx(1.0).epsilon(1e-14));

    SUBCASE("still video has zero motion") {
        const VideoLatent still({5.0, -1.0, 5.0, -1.0}, 2, kPair);
        CHECK(motion_intensity(still) == 0.0);
    }
    SUBCASE("translation of all frames leaves motion unchanged") {
        VideoLatent moved = video;
        for (double& v : moved.data()) v += 10.0;
        CHECK(motion_intensity(moved) == doctest::Approx(motion_intensity(video)).epsilon(1e-12));
    }
    SUBCASE("single frame is an error") {
        CHECK_THROWS_AS(motion_intensity(VideoLatent(1, kPair)), Error);
    }
}

TEST_CASE("compute_metrics: aggregates and single-frame sentinels") {
    const ImageLatent ref({1.0, 0.0}, kPair);

    SUBCASE("multi-frame report") {
        const VideoLatent video({1.0, 0.0, 1.0, 1.0}, 2, kPair);
        const MetricReport report = compute_metrics(video, ref);
        REQUIRE(report.frame_cosine.size() == 2);
        CHECK(report.mean_cosine ==
              doctest::Approx((1.0 + 0.7071067811865476) / 2.0).epsilon(1e-14));
        CHECK(report.mean_mse == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(report.temporal_coherence == doctest::Approx(0.7071067811865476).epsilon(1e-14));
        CHECK(report.motion_intensity == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    }
    SUBCASE("L = 1 yields NaN temporal scores, fidelity still defined") {
        const VideoLatent one({1.0, 0.0}, 1, kPair);
        const MetricReport report = compute_metrics(one, ref);
        CHECK(report.mean_cosine == doctest::Approx(1.0));
        CHECK(report.mean_mse == 0.0);
        CHECK(std::isnan(report.temporal_coherence));
        CHECK(std::isnan(report.motion_intensity));
    }
    SUBCASE("a zero frame poisons the mean cosine but not the mse") {
        const VideoLatent video({1.0, 0.0, 0.0, 0.0}, 2, kPair);
        const MetricReport report = compute_metrics(video, ref);
        CHECK(std::isnan(report.mean_cosine));
        CHECK(report.mean_mse == doctest::Approx(0.25).epsilon(1e-14));
    }
}

TEST_CASE("spearman: rank correlation with tie handling") {
    SUBCASE("perfect monotone relations") {
        CHECK(spearman({1, 2, 3, 4}, {10, 20, 30, 40}) == doctest::Approx(1.0));
        CHECK(spearman({1, 2, 3, 4}, {5, 1, 0, -2}) == doctest::Approx(-1.0));
        // monotone but nonlinear is still rank-perfect
        CHECK(spearman({1, 2, 3, 4}, {1, 8, 27, 64}) == doctest::Approx(1.0));
    }
    SUBCASE("hand value with one swap") {
        // x = 1..4, y = (1, 2, 4, 3): rho = 1 - 6*2 / (4*15) = 0.8
        CHECK(spearman({1, 2, 3, 4}, {1, 2, 4, 3}) == doctest::Approx(0.8).epsilon(1e-12));
    }
    SUBCASE("ties get average ranks") {
        // y has a tie: ranks (1, 2.5, 2.5, 4)
        const double rho = spearman({1, 2, 3, 4}, {0, 1, 1, 2});
        CHECK(rho > 0.94);
        CHECK(rho < 0.949);
    }
    SUBCASE("degenerate inputs are NaN") {
        CHECK(std::isnan(spearman({1}, {2})));
        CHECK(std::isnan(spearman({1, 2}, {3})));
        CHECK(std::isnan(spearman({1, 2, 3}, {7, 7, 7})));
        CHECK(std::isnan(spearman({}, {})));
    }
}
