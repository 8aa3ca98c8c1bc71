#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gaugeflow/lieflow.hpp"
#include "test_util.hpp"

using namespace gaugeflow;
using testutil::kTwoPi;
using testutil::make_field;

TEST_CASE("generator fields") {
    const Grid g(32, 32);
    const Generator tx = make_generator(GeneratorKind::TranslateX, g);
    CHECK_FALSE(tx.approximate_symmetry);
    for (double u : tx.field.ux) CHECK(u == 1.0);
    for (double u : tx.field.uy) CHECK(u == 0.0);

    // Rotation vanishes at its center; the nearest node is within one cell.
    const Generator rot = make_generator(GeneratorKind::Rotate, g);
    CHECK(rot.approximate_symmetry);
    double best = 1e9;
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            const int k = g.index(ix, iy);
            best = std::min(best, std::hypot(rot.field.ux[k], rot.field.uy[k]));
        }
    CHECK(best <= g.hx);

    // Dilation has divergence 2 away from the coordinate wrap seam.
    const Generator dil = make_generator(GeneratorKind::Dilate, g);
    const ScalarField div = divergence(dil.field);
    for (int iy = 1; iy < g.ny - 1; ++iy)
        for (int ix = 1; ix < g.nx - 1; ++ix)
            CHECK(div(ix, iy) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("assemble") {
    const Grid g(16, 16);
    const GeneratorBasis basis =
        make_basis({GeneratorKind::TranslateX, GeneratorKind::TranslateY}, g);

    MultiField zero(g, 2);
    const VectorField a0 = assemble(basis, zero);
    for (double u : a0.ux) CHECK(u == 0.0);
    for (double u : a0.uy) CHECK(u == 0.0);

    MultiField c(g, 2);
    for (double& x : c.channel[0].v) x = 2.5;
    const VectorField ac = assemble(basis, c);
    for (double u : ac.ux) CHECK(u == 2.5);
    for (double u : ac.uy) CHECK(u == 0.0);

    // phi = (y, -x) against the hand-assembled pointwise sum.
    MultiField phi(g, 2);
    phi.channel[0] = make_field(g, [](double, double y) { return y; });
    phi.channel[1] = make_field(g, [](double x, double) { return -x; });
    const VectorField rot = assemble(basis, phi);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            const int k = g.index(ix, iy);
            CHECK(std::abs(rot.ux[k] - g.y(iy)) <= 1e-15);
            CHECK(std::abs(rot.uy[k] + g.x(ix)) <= 1e-15);
        }

    MultiField wrong(g, 3);
    CHECK_THROWS_AS(assemble(basis, wrong), conformability_error);
}

TEST_CASE("warp identity is bit-exact") {
    const Grid g(16, 16);
    Rng rng(5);
    const ScalarField S = random_smooth_field(g, 3, rng);

    const Generator tx = make_generator(GeneratorKind::TranslateX, g);
    const ScalarField w0 = warp(S, tx.field, FlowConfig(0.0, 8));
    for (std::size_t i = 0; i < S.v.size(); ++i) CHECK(w0.v[i] == S.v[i]);

    const VectorField zero(g);
    const ScalarField wz = warp(S, zero, FlowConfig(0.7, 8));
    for (std::size_t i = 0; i < S.v.size(); ++i) CHECK(wz.v[i] == S.v[i]);
}

TEST_CASE("warp by integer shifts matches circular shift") {
    const Grid g(32, 32);
    Rng rng(6);
    const ScalarField S = random_smooth_field(g, 4, rng);
    const Generator tx = make_generator(GeneratorKind::TranslateX, g);

    for (int k : {1, 3, 7}) {
        const ScalarField w = warp(S, tx.field, FlowConfig(k * g.hx, 4));
        const ScalarField expected = shift(S, k, 0);
        CHECK(testutil::max_abs_diff(w, expected) <= 1e-12);
    }
}

TEST_CASE("warp linearizes to the orbit directions") {
    // Needs t >> hx across the ladder, otherwise the bilinear sampling error
    // (O(t*h) near nodes) pollutes the quadratic term.
    const Grid g(256, 256);
    const ScalarField S = make_field(g, [](double x, double y) {
        return std::sin(kTwoPi * x) + 0.5 * std::cos(kTwoPi * y);
    });
    const GeneratorBasis basis =
        make_basis({GeneratorKind::TranslateX, GeneratorKind::TranslateY}, g);
    MultiField phi(g, 2);
    phi.channel[0] = make_field(g, [](double, double y) { return 0.3 + 0.2 * std::sin(kTwoPi * y); });
    phi.channel[1] = make_field(g, [](double x, double) { return 0.1 * std::cos(kTwoPi * x); });

    const VectorField A = assemble(basis, phi);
    const ScalarField rlin = linearized_residual(S, basis, phi);

    std::vector<double> ts, errs;
    for (int p = 3; p <= 7; ++p) {
        const double t = std::pow(2.0, -p);
        const ScalarField w = warp(S, A, FlowConfig(t, 8));
        ScalarField pred = S;
        axpy(t, rlin, pred);
        errs.push_back(norm(w - pred));
        ts.push_back(t);
    }
    const double slope = testutil::loglog_slope(ts, errs);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("orbit directions") {
    const Grid g(64, 64);
    const ScalarField c(g, 4.0);
    const Generator tx = make_generator(GeneratorKind::TranslateX, g);
    for (double e : orbit_direction(c, tx).v) CHECK(e == 0.0);

    const ScalarField f = testutil::sin2pix(g);
    const ScalarField e = orbit_direction(f, tx);
    const double bound = std::pow(kTwoPi, 3) * g.hx * g.hx / 6.0;
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix)
            CHECK(std::abs(e(ix, iy) + kTwoPi * std::cos(kTwoPi * g.x(ix))) <= bound);

    // A direction that stabilizes the signal gives exactly zero.
    const Generator ty = make_generator(GeneratorKind::TranslateY, g);
    for (double ei : orbit_direction(f, ty).v) CHECK(ei == 0.0);
}

TEST_CASE("linearized residual basics") {
    const Grid g(16, 16);
    Rng rng(9);
    const ScalarField S = random_smooth_field(g, 3, rng);
    const GeneratorBasis basis = make_basis({GeneratorKind::TranslateX}, g);

    MultiField zero(g, 1);
    for (double r : linearized_residual(S, basis, zero).v) CHECK(r == 0.0);

    MultiField one(g, 1);
    for (double& x : one.channel[0].v) x = 1.0;
    const ScalarField r = linearized_residual(S, basis, one);
    const ScalarField e = orbit_direction(S, basis.gens[0]);
    CHECK(testutil::max_abs_diff(r, e) == 0.0);
}

TEST_CASE("substep halving shows fourth-order flow convergence") {
    const Grid g(64, 64);
    const ScalarField S = make_field(g, [](double x, double y) {
        return std::sin(kTwoPi * x) * std::cos(kTwoPi * y);
    });
    // Smooth periodic velocity field.
    VectorField X(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            const int k = g.index(ix, iy);
            X.ux[k] = 0.3 * std::sin(kTwoPi * g.y(iy));
            X.uy[k] = 0.3 * std::cos(kTwoPi * g.x(ix));
        }

    const double t = 0.8;
    const ScalarField ref = warp(S, X, FlowConfig(t, 256));
    std::vector<double> hs, errs;
    for (int s : {1, 2, 4}) {
        const ScalarField w = warp(S, X, FlowConfig(t, s));
        hs.push_back(t / s);
        errs.push_back(norm(w - ref));
    }
    const double slope = testutil::loglog_slope(hs, errs);
    CHECK(slope >= 3.4);
    CHECK(slope <= 4.8);
}

TEST_CASE("approximate semigroup property") {
    const Grid g(64, 64);
    const ScalarField S = make_field(g, [](double x, double y) {
        return std::sin(kTwoPi * x) * std::cos(kTwoPi * y);
    });
    VectorField X(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            const int k = g.index(ix, iy);
            X.ux[k] = 0.3 * std::sin(kTwoPi * g.y(iy));
            X.uy[k] = 0.3 * std::cos(kTwoPi * g.x(ix));
        }

    // The substep-dependent error of the composed map decays at the RK4 rate.
    const double leg = 0.8;
    auto compose = [&](int s) {
        return warp(warp(S, X, FlowConfig(leg, s)), X, FlowConfig(leg, s));
    };
    const ScalarField ref = compose(256);
    std::vector<double> hs, errs;
    for (int s : {1, 2, 4}) {
        hs.push_back(leg / s);
        errs.push_back(norm(compose(s) - ref));
    }
    const double slope = testutil::loglog_slope(hs, errs);
    CHECK(slope >= 3.4);
    CHECK(slope <= 4.8);

    // Composition re-samples the intermediate field, so it matches the direct
    // warp only up to the bilinear interpolation floor (O(h^2) per resample).
    const ScalarField direct = warp(S, X, FlowConfig(2 * leg, 256));
    CHECK(norm(ref - direct) <= 0.01);
}
