#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "noiserect/synthprior.hpp"

using namespace noiserect;

namespace {

std::size_t argmax(const std::vector<double>& v) {
    return static_cast<std::size_t>(
        std::distance(v.begin(), std::max_element(v.begin(), v.end())));
}

}  // namespace

TEST_CASE("blob frames: peak follows center + frame * velocity") {
    BlobScene scene;  // defaults: 16x16, center (4,4), velocity (0.5,0.5)

    const ImageLatent f0 = render_blob_frame(scene, 0);
    CHECK(argmax(f0.data()) == 4u * 16u + 4u);

    // frame 8: center has drifted to (8, 8)
    const ImageLatent f8 = render_blob_frame(scene, 8);
    CHECK(argmax(f8.data()) == 8u * 16u + 8u);

    // the peak value at an integer-aligned center is background + amplitude
    CHECK(f0.data()[4 * 16 + 4] == doctest::Approx(1.1).epsilon(1e-14));
    CHECK(f8.data()[8 * 16 + 8] == doctest::Approx(1.1).epsilon(1e-14));

    // far corner is close to pure background
    CHECK(f0.data()[15 * 16 + 15] == doctest::Approx(0.1).epsilon(1e-6));
}

TEST_CASE("blob frames: zero velocity renders identical frames") {
    BlobScene scene;
    scene.velocity = {0.0, 0.0};
    const ImageLatent a = render_blob_frame(scene, 0);
    const ImageLatent b = render_blob_frame(scene, 7);
    CHECK(a.data() == b.data());
}

TEST_CASE("blob frames: bump mass is conserved while it stays on-grid") {
    // a narrow fully-interior bump integrates to (almost) the same total no
    // matter where its center sits, so drifting frames keep constant mass
    BlobScene scene;
    scene.center = {6.0, 6.0};
    scene.velocity = {0.3, 0.4};
    scene.radius = 1.0;
    scene.background = 0.0;

    const auto mass = [](const ImageLatent& img) {
        double sum = 0.0;
        for (double v : img.data()) sum += v;
        return sum;
    };
    const double m0 = mass(render_blob_frame(scene, 0));
    for (int f = 1; f <= 8; ++f) {
        const double mf = mass(render_blob_frame(scene, f));
        CHECK(std::fabs(mf - m0) / m0 < 1e-6);
    }
}

TEST_CASE("blob frames: subpixel centers land between pixels") {
    BlobScene scene;
    scene.center = {5.5, 5.0};
    scene.velocity = {0.0, 0.0};
    const ImageLatent img = render_blob_frame(scene, 0);
    // rows 5 and 6 straddle the center symmetrically
    CHECK(img.data()[5 * 16 + 5] == doctest::Approx(img.data()[6 * 16 + 5]).epsilon(1e-14));
    CHECK(img.data()[5 * 16 + 5] > img.data()[4 * 16 + 5]);
}

TEST_CASE("blob scene validation") {
    BlobScene bad;
    bad.height = 3;
    CHECK_THROWS_AS(bad.validate(), Error);

    BlobScene bad_r;
    bad_r.radius = 0.0;
    CHECK_THROWS_AS(bad_r.validate(), Error);

    BlobScene bad_a;
    bad_a.amplitude = -1.0;
    CHECK_THROWS_AS(bad_a.validate(), Error);

    BlobScene scene;
    CHECK_THROWS_AS(render_blob_frame(scene, -1), Error);
}

TEST_CASE("blob prior: means are the rendered frames, variances are sigma^2") {
    BlobScene scene;
    const VideoPrior prior = blob_prior(scene, 6, 0.3);
    REQUIRE(prior.component_count() == 1);
    const auto& comp = prior.components().front();
    CHECK(comp.weight == 1.0);
    CHECK(prior.frame_count() == 6);
    CHECK(prior.dims() == LatentDims{1, 16, 16});

    for (int f = 0; f < 6; ++f) {
        const ImageLatent expect = render_blob_frame(scene, f);
        for (std::size_t i = 0; i < expect.size(); ++i) {
            CHECK(comp.means.at(f, i) == expect[i]);
        }
        CHECK(comp.variances[static_cast<std::size_t>(f)] == doctest::Approx(0.09));
    }

    CHECK_THROWS_AS(blob_prior(scene, 0, 0.3), Error);
    CHECK_THROWS_AS(blob_prior(scene, 4, 0.0), Error);
    CHECK_THROWS_AS(blob_prior(scene, 4, -1.0), Error);
}

TEST_CASE("blob prior: sample mean converges to the rendered means") {
    BlobScene scene;
    scene.height = 8;
    scene.width = 8;
    const VideoPrior prior = blob_prior(scene, 2, 0.5);
    const auto& comp = prior.components().front();

    const int trials = 4000;
    std::vector<double> sum(comp.means.total_size(), 0.0);
    SeededRng rng(321);
    for (int i = 0; i < trials; ++i) {
        const VideoLatent draw = prior.sample(rng);
        for (std::size_t j = 0; j < sum.size(); ++j) {
            sum[j] += draw.data()[j];
        }
    }
    const double se = 0.5 / std::sqrt(static_cast<double>(trials));
    for (std::size_t j = 0; j < sum.size(); ++j) {
        CHECK(std::fabs(sum[j] / trials - comp.means.data()[j]) < 3.5 * se);
    }
}

TEST_CASE("sample_reference: frame-0 statistics, deterministic per seed") {
    BlobScene scene;
    const VideoPrior prior = blob_prior(scene, 4, 0.2);

    SeededRng a(9), b(9), c(10);
    const ImageLatent ra = sample_reference(prior, a);
    const ImageLatent rb = sample_reference(prior, b);
    const ImageLatent rc = sample_reference(prior, c);
    CHECK(ra.data() == rb.data());
    CHECK(ra.data() != rc.data());
    CHECK(ra.dims() == prior.dims());

    // with near-zero spread the draw pins to the frame-0 mean
    const VideoPrior tight = blob_prior(scene, 4, 1e-9);
    SeededRng d(11);
    const ImageLatent rd = sample_reference(tight, d);
    const ImageLatent mean0 = render_blob_frame(scene, 0);
    for (std::size_t i = 0; i < rd.size(); ++i) {
        CHECK(rd[i] == doctest::Approx(mean0[i]).epsilon(1e-6));
    }
}
