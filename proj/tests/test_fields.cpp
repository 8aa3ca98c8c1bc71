#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "gaugeflow/field_io.hpp"
#include "gaugeflow/fields.hpp"
#include "test_util.hpp"

using namespace gaugeflow;
using testutil::kTwoPi;
using testutil::make_field;

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(Grid(3, 8), config_error);
    CHECK_THROWS_AS(Grid(8, 2), config_error);
    const Grid g(16, 24);
    CHECK(g.cell_measure() * g.size() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.wrap_x(-1) == 15);
    CHECK(g.wrap_x(16) == 0);
}

TEST_CASE("inner product basics") {
    const Grid g(16, 16);
    const ScalarField ones(g, 1.0);
    CHECK(inner_product(ones, ones) == doctest::Approx(1.0).epsilon(1e-15));

    const ScalarField zero(g);
    Rng rng(1);
    const ScalarField f = random_smooth_field(g, 3, rng);
    CHECK(inner_product(zero, f) == 0.0);

    const Grid g2(8, 8);
    const ScalarField other(g2, 1.0);
    CHECK_THROWS_AS(inner_product(ones, other), conformability_error);
}

TEST_CASE("periodic quadrature of sin^2 is exact") {
    const Grid g(64, 64);
    const ScalarField f = testutil::sin2pix(g);
    CHECK(std::abs(inner_product(f, f) - 0.5) < 1e-12);
}

TEST_CASE("gradient of constants and the sawtooth") {
    const Grid g(32, 32);
    const ScalarField c(g, 3.25);
    const VectorField gc = grad(c);
    for (double u : gc.ux) CHECK(u == 0.0);
    for (double u : gc.uy) CHECK(u == 0.0);

    // f = x wraps at the seam; interior columns see the analytic slope 1.
    const ScalarField saw = make_field(g, [](double x, double) { return x; });
    const VectorField gs = grad(saw);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 1; ix < g.nx - 1; ++ix)
            CHECK(gs.ux[g.index(ix, iy)] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gradient truncation error bound for sin") {
    const Grid g(128, 128);
    const ScalarField f = testutil::sin2pix(g);
    const VectorField gf = grad(f);
    const double bound = std::pow(kTwoPi, 3) * g.hx * g.hx / 6.0;
    for (int iy = 0; iy < g.ny; ++iy) {
        for (int ix = 0; ix < g.nx; ++ix) {
            const double exact = kTwoPi * std::cos(kTwoPi * g.x(ix));
            CHECK(std::abs(gf.ux[g.index(ix, iy)] - exact) <= bound);
        }
    }
}

TEST_CASE("laplacian of constants, eigenvalue, and spectral accuracy band") {
    const Grid g(64, 64);
    const ScalarField c(g, -2.0);
    for (double x : laplacian(c).v) CHECK(x == 0.0);

    // The operator is the exact adjoint composition of central differences,
    // whose sin(2 pi x) eigenvalue is sin^2(2 pi h)/h^2.
    const ScalarField f = testutil::sin2pix(g);
    const ScalarField lf = laplacian(f);
    const double lam = std::pow(std::sin(kTwoPi * g.hx), 2) / (g.hx * g.hx);
    for (std::size_t i = 0; i < f.v.size(); ++i)
        CHECK(std::abs(lf.v[i] - lam * f.v[i]) <= 1e-10);

    // Second-order accuracy against the continuum eigenvalue (2 pi)^2.
    CHECK(std::abs(lam - kTwoPi * kTwoPi) <=
          std::pow(kTwoPi, 4) * g.hx * g.hx / 3.0);
}

TEST_CASE("summation by parts, self-adjointness, zero mean") {
    const Grid g(24, 40);
    Rng rng(7);
    for (int rep = 0; rep < 5; ++rep) {
        ScalarField f(g), h(g);
        for (double& x : f.v) x = rng.gaussian();
        for (double& x : h.v) x = rng.gaussian();
        const double nf = norm(f), nh = norm(h);

        const ScalarField lf = laplacian(f);
        const ScalarField lh = laplacian(h);
        CHECK(std::abs(inner_product(lf, h) - inner_product(grad(f), grad(h))) <=
              1e-10 * nf * nh);
        CHECK(std::abs(inner_product(lf, h) - inner_product(f, lh)) <=
              1e-10 * nf * nh);
        CHECK(std::abs(integrate(lf)) <= 1e-12 * nf);
    }
}

TEST_CASE("translation equivariance of grad is exact") {
    const Grid g(16, 16);
    Rng rng(3);
    const ScalarField f = random_smooth_field(g, 4, rng);
    const VectorField g1 = grad(shift(f, 5, -3));
    const VectorField g0 = grad(f);
    // shift(grad f) component-wise
    ScalarField ux0(g), uy0(g);
    ux0.v = g0.ux;
    uy0.v = g0.uy;
    const ScalarField uxs = shift(ux0, 5, -3);
    const ScalarField uys = shift(uy0, 5, -3);
    for (std::size_t i = 0; i < uxs.v.size(); ++i) {
        CHECK(g1.ux[i] == uxs.v[i]);
        CHECK(g1.uy[i] == uys.v[i]);
    }
}

TEST_CASE("multifield inner product sums channels") {
    const Grid g(8, 8);
    MultiField a(g, 2), b(g, 2);
    for (auto& ch : a.channel)
        for (double& x : ch.v) x = 1.0;
    for (auto& ch : b.channel)
        for (double& x : ch.v) x = 2.0;
    CHECK(inner_product(a, b) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("binary field io round trip") {
    const Grid g(12, 8);
    Rng rng(11);
    MultiField f(g, 3);
    for (auto& ch : f.channel)
        for (double& x : ch.v) x = rng.gaussian();

    const auto dir = std::filesystem::temp_directory_path() / "gaugeflow_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "field.bin";
    save_field(path, f);
    const MultiField back = load_field(path);
    REQUIRE(back.channels() == 3);
    REQUIRE(back.grid().nx == 12);
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < f.channel[c].v.size(); ++i)
            CHECK(back.channel[c].v[i] == f.channel[c].v[i]);

    const auto csv = dir / "field.csv";
    save_field_csv(csv, f);
    const MultiField csv_back = load_field_csv(csv, g, 3);
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < f.channel[c].v.size(); ++i)
            CHECK(csv_back.channel[c].v[i] == f.channel[c].v[i]);

    std::filesystem::remove_all(dir);
}
