#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "noiserect/config.hpp"

using namespace noiserect;

TEST_CASE("KvFile: sections, comments, whitespace") {
    KvFile kv = KvFile::parse(
        "# leading comment\n"
        "top = 1\n"
        "\n"
        "[run]\n"
        "seed = 42\n"
        "; another comment style\n"
        "out_dir = results/a b\n"
        "[video]\n"
        "L = 8\n",
        "inline");

    CHECK(kv.has("top"));
    CHECK(kv.has("run.seed"));
    CHECK_FALSE(kv.has("seed"));
    CHECK(kv.take_uint("run.seed", 0) == 42);
    CHECK(kv.take_string("run.out_dir", "") == "results/a b");
    CHECK(kv.take_int("video.L", 0) == 8);
    CHECK(kv.take_int("top", 0) == 1);
    CHECK_NOTHROW(kv.finish());
}

TEST_CASE("KvFile: finish names unconsumed keys") {
    KvFile kv = KvFile::parse("a = 1\nmistyped_key = 2\n", "inline");
    CHECK(kv.take_int("a", 0) == 1);
    try {
        kv.finish();
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.category() == ErrorCategory::config);
        CHECK(std::string(e.what()).find("mistyped_key") != std::string::npos);
    }
}

TEST_CASE("KvFile: malformed and duplicate lines") {
    CHECK_THROWS_AS(KvFile::parse("just some words\n", "inline"), Error);
    CHECK_THROWS_AS(KvFile::parse("a = 1\na = 2\n", "inline"), Error);
    CHECK_THROWS_AS(KvFile::parse("[sec]\nx = 1\n[sec2\n", "inline"), Error);

    // errors carry the origin and a line number
    try {
        KvFile::parse("ok = 1\nbroken line\n", "myfile.cfg");
        FAIL("expected a throw");
    } catch (const Error& e) {
        const std::string what = e.what();
        CHECK(what.find("myfile.cfg") != std::string::npos);
        CHECK(what.find("2") != std::string::npos);
    }
}

TEST_CASE("KvFile: typed accessors convert or reject") {
    KvFile kv = KvFile::parse("n = 12\nx = 0.5\nlist = 1 2.5 -3\nbad = soup\n", "inline");
    CHECK(kv.take_int("n", 0) == 12);
    CHECK(kv.take_double("x", 0.0) == 0.5);
    CHECK(kv.take_doubles("list") == std::vector<double>{1.0, 2.5, -3.0});
    CHECK(kv.take_doubles("absent").empty());
    CHECK_THROWS_AS(kv.take_double("bad", 0.0), Error);
    CHECK(kv.take_int("absent2", -7) == -7);
    CHECK_THROWS_AS(kv.require("gone"), Error);
}

TEST_CASE("run config: defaults from an empty file") {
    KvFile kv = KvFile::parse("", "inline");
    const RunConfig cfg = parse_run_config(kv);
    kv.finish();

    CHECK(cfg.seed == 0);
    CHECK(cfg.T == 1000);
    CHECK(cfg.beta_start == 1e-4);
    CHECK(cfg.beta_end == 0.02);
    CHECK(cfg.sampler_kind == "ddim");
    CHECK(cfg.eta == 0.0);
    CHECK(cfg.K == 50);
    CHECK(cfg.strength == 1.0);
    CHECK(cfg.L == 16);
    CHECK(cfg.dims == LatentDims{1, 16, 16});
    CHECK(cfg.prior.kind == PriorSpec::Kind::blob);
    CHECK(cfg.bias_norm == 0.0);
    CHECK(cfg.bias_scaling == BiasScaling::noise_level);
    CHECK(cfg.reference.kind == ReferenceSpec::Kind::sample);
    CHECK(cfg.omega.ramp);
    CHECK(cfg.omega.omega_min == 0.5);
    CHECK(cfg.tau_start == 0.0);
    CHECK(cfg.tau_end == 0.6);
    CHECK(cfg.condition.empty());
    CHECK_FALSE(cfg.dump_trajectory);
}

TEST_CASE("run config: omega forms") {
    SUBCASE("ramp") {
        KvFile kv = KvFile::parse("[rectifier]\nomega = ramp 0.25\n", "inline");
        const RunConfig cfg = parse_run_config(kv);
        CHECK(cfg.omega.ramp);
        CHECK(cfg.omega.omega_min == 0.25);
        const auto w = cfg.omega.expand(3);
        CHECK(w == std::vector<double>{1.0, 0.625, 0.25});
    }
    SUBCASE("explicit list") {
        KvFile kv = KvFile::parse("[rectifier]\nomega = list 1 0.5 0\n", "inline");
        const RunConfig cfg = parse_run_config(kv);
        CHECK_FALSE(cfg.omega.ramp);
        CHECK(cfg.omega.expand(3) == std::vector<double>{1.0, 0.5, 0.0});
        // list length must match L on expansion
        CHECK_THROWS_AS(cfg.omega.expand(4), Error);
    }
    SUBCASE("malformed") {
        KvFile bad1 = KvFile::parse("[rectifier]\nomega = ramp\n", "inline");
        CHECK_THROWS_AS(parse_run_config(bad1), Error);
        KvFile bad2 = KvFile::parse("[rectifier]\nomega = wedge 1 2\n", "inline");
        CHECK_THROWS_AS(parse_run_config(bad2), Error);
    }
}

TEST_CASE("run config: prior and denoiser validation") {
    SUBCASE("unknown prior kind") {
        KvFile kv = KvFile::parse("[prior]\nkind = volcano\n", "inline");
        CHECK_THROWS_AS(parse_run_config(kv), Error);
    }
    SUBCASE("blob scene keys flow through") {
        KvFile kv = KvFile::parse(
            "[video]\nheight = 8\nwidth = 8\n"
            "[prior]\ncenter = 2 3\nvelocity = 0.25 0\nradius = 1.5\nsigma = 0.2\n",
            "inline");
        const RunConfig cfg = parse_run_config(kv);
        kv.finish();
        CHECK(cfg.prior.scene.height == 8);
        CHECK(cfg.prior.scene.center == std::pair<double, double>{2.0, 3.0});
        CHECK(cfg.prior.scene.velocity == std::pair<double, double>{0.25, 0.0});
        CHECK(cfg.prior.scene.radius == 1.5);
        CHECK(cfg.prior.sigma == 0.2);
        const VideoPrior prior = cfg.prior.build(4, cfg.dims);
        CHECK(prior.frame_count() == 4);
        CHECK(prior.dims() == LatentDims{1, 8, 8});
    }
    SUBCASE("only the analytic denoiser exists") {
        KvFile kv = KvFile::parse("[denoiser]\nkind = learned\n", "inline");
        CHECK_THROWS_AS(parse_run_config(kv), Error);
    }
    SUBCASE("bias scale names") {
        KvFile kv = KvFile::parse("[denoiser]\nbias_scale = none\n", "inline");
        CHECK(parse_run_config(kv).bias_scaling == BiasScaling::none);
        KvFile bad = KvFile::parse("[denoiser]\nbias_scale = huge\n", "inline");
        CHECK_THROWS_AS(parse_run_config(bad), Error);
    }
    SUBCASE("reference kinds") {
        KvFile kv = KvFile::parse("[reference]\nkind = mean\n", "inline");
        CHECK(parse_run_config(kv).reference.kind == ReferenceSpec::Kind::mean);
        KvFile bad = KvFile::parse("[reference]\nkind = nowhere\n", "inline");
        CHECK_THROWS_AS(parse_run_config(bad), Error);
        // file kind requires the path
        KvFile missing = KvFile::parse("[reference]\nkind = file\n", "inline");
        CHECK_THROWS_AS(parse_run_config(missing), Error);
    }
}

TEST_CASE("sweep spec: axis names, value list, seed forms") {
    SUBCASE("axis names round-trip") {
        for (SweepAxis axis : {SweepAxis::omega_min, SweepAxis::tau_end, SweepAxis::tau_start,
                               SweepAxis::bias_norm}) {
            CHECK(sweep_axis_from_string(to_string(axis)) == axis);
        }
        CHECK_THROWS_AS(sweep_axis_from_string("volume"), Error);
    }
}

TEST_CASE("apply_axis: substitutes one knob plus the seed") {
    KvFile kv = KvFile::parse("", "inline");
    const RunConfig base = parse_run_config(kv);

    SUBCASE("tau_end") {
        const RunConfig cfg = apply_axis(base, SweepAxis::tau_end, 0.9, 17);
        CHECK(cfg.tau_end == 0.9);
        CHECK(cfg.seed == 17);
        CHECK(cfg.tau_start == base.tau_start);
    }
    SUBCASE("tau_start") {
        const RunConfig cfg = apply_axis(base, SweepAxis::tau_start, 0.1, 3);
        CHECK(cfg.tau_start == 0.1);
        CHECK(cfg.tau_end == base.tau_end);
    }
    SUBCASE("omega_min rewrites the ramp") {
        const RunConfig cfg = apply_axis(base, SweepAxis::omega_min, 0.75, 5);
        CHECK(cfg.omega.ramp);
        CHECK(cfg.omega.omega_min == 0.75);
    }
    SUBCASE("omega_min on an explicit list is rejected") {
        RunConfig list_base = base;
        list_base.omega.ramp = false;
        list_base.omega.values = {1.0, 0.5};
        CHECK_THROWS_AS(apply_axis(list_base, SweepAxis::omega_min, 0.75, 5), Error);
    }
    SUBCASE("bias_norm") {
        const RunConfig cfg = apply_axis(base, SweepAxis::bias_norm, 0.4, 9);
        CHECK(cfg.bias_norm == 0.4);
    }
}
