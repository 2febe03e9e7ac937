#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "noiserect/rng.hpp"

using namespace noiserect;

TEST_CASE("uniform01: in (0, 1], deterministic, seed-sensitive") {
    SeededRng a(42), b(42), c(43);
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform01();
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
        CHECK(u == b.uniform01());
    }
    // a different seed diverges immediately
    SeededRng a2(42);
    CHECK(a2.uniform01() != c.uniform01());
}

TEST_CASE("normal consumes exactly two uniforms, no caching") {
    // interleaving normal() and uniform01() must match a pure uniform stream:
    // each normal() advances the counter by exactly 2.
    SeededRng mixed(9), plain(9);
    const double n0 = mixed.normal();
    const double u2 = mixed.uniform01();

    const double a = plain.uniform01();
    const double b = plain.uniform01();
    const double expect_n0 = std::sqrt(-2.0 * std::log(a)) * std::cos(2.0 * 3.14159265358979323846 * b);
    CHECK(n0 == doctest::Approx(expect_n0).epsilon(1e-15));
    CHECK(u2 == plain.uniform01());

    // a second normal right after: again exactly two draws
    const double n1 = mixed.normal();
    const double c = plain.uniform01();
    const double d = plain.uniform01();
    const double expect_n1 = std::sqrt(-2.0 * std::log(c)) * std::cos(2.0 * 3.14159265358979323846 * d);
    CHECK(n1 == doctest::Approx(expect_n1).epsilon(1e-15));
}

TEST_CASE("normal: standard moments over a large sample") {
    SeededRng rng(1234);
    const int n = 200000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        sum += x;
        sumsq += x * x;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(std::fabs(mean) < 3.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::fabs(var - 1.0) < 3.0 * std::sqrt(2.0 / n));
}

TEST_CASE("derive_seed: stable and distinct across labels") {
    const std::uint64_t s1 = SeededRng::derive_seed(7, 0);
    const std::uint64_t s1_again = SeededRng::derive_seed(7, 0);
    const std::uint64_t s2 = SeededRng::derive_seed(7, 1);
    const std::uint64_t s3 = SeededRng::derive_seed(8, 0);
    CHECK(s1 == s1_again);
    CHECK(s1 != s2);
    CHECK(s1 != s3);

    // derived streams are unrelated in practice: first draws differ
    SeededRng r1(s1), r2(s2), r3(s3);
    CHECK(r1.uniform01() != r2.uniform01());
    CHECK(r1.uniform01() != r3.uniform01());
}

TEST_CASE("streams with nearby seeds are decorrelated") {
    // splitmix-style mixing: consecutive seeds should not produce visibly
    // correlated outputs
    SeededRng a(100), b(101);
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double x = a.normal();
        const double y = b.normal();
        dot += x * y;
        na += x * x;
        nb += y * y;
    }
    const double corr = dot / std::sqrt(na * nb);
    CHECK(std::fabs(corr) < 0.05);
}
