#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gaugeflow/rng.hpp"

using gaugeflow::Rng;

TEST_CASE("philox known-answer vectors") {
    // Reference vectors for the 4x32 variant with 10 rounds.
    auto out = Rng::block({0u, 0u, 0u, 0u}, {0u, 0u});
    CHECK(out[0] == 0x6627e8d5u);
    CHECK(out[1] == 0xe169c58du);
    CHECK(out[2] == 0xbc57ac4cu);
    CHECK(out[3] == 0x9b00dbd8u);

    out = Rng::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                     {0xffffffffu, 0xffffffffu});
    CHECK(out[0] == 0x408f276du);
    CHECK(out[1] == 0x41c83b0eu);
    CHECK(out[2] == 0xa20bc7c6u);
    CHECK(out[3] == 0x6d5451fdu);
}

TEST_CASE("streams are reproducible and distinct") {
    Rng a(42, 7);
    Rng b(42, 7);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    Rng c(42, 8);
    Rng d(42, 7);
    int same = 0;
    for (int i = 0; i < 100; ++i)
        if (c.next_u64() == d.next_u64()) ++same;
    CHECK(same == 0);

    // Substreams derived from the same parent agree across calls.
    Rng parent(1, 2);
    Rng s1 = parent.substream(5);
    Rng s2 = parent.substream(5);
    CHECK(s1.next_u64() == s2.next_u64());
}

TEST_CASE("uniform and gaussian moments") {
    Rng rng(123, 0);
    const int n = 200000;
    double mean = 0.0, var = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        mean += u;
        var += (u - 0.5) * (u - 0.5);
    }
    mean /= n;
    var /= n;
    CHECK(std::abs(mean - 0.5) < 0.005);
    CHECK(std::abs(var - 1.0 / 12.0) < 0.005);

    double gm = 0.0, gv = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.gaussian();
        gm += z;
        gv += z * z;
    }
    gm /= n;
    gv /= n;
    CHECK(std::abs(gm) < 0.01);
    CHECK(std::abs(gv - 1.0) < 0.02);
}
