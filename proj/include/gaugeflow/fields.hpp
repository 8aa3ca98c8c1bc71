#pragma once

#include <cstddef>
#include <vector>

#include "gaugeflow/errors.hpp"
#include "gaugeflow/rng.hpp"

namespace gaugeflow {

/// Uniform periodic grid over the unit torus [0,1)^2.
///
/// Nodes sit at (ix*hx, iy*hy), stored row-major (iy outer, ix inner).
/// Total measure is exactly 1, so energies are comparable across resolutions.
struct Grid {
    int nx = 0;
    int ny = 0;
    double hx = 0.0;
    double hy = 0.0;

    Grid() = default;
    Grid(int nx_, int ny_) : nx(nx_), ny(ny_) {
        if (nx < 4 || ny < 4) throw config_error("Grid: nx and ny must be >= 4");
        hx = 1.0 / nx;
        hy = 1.0 / ny;
    }

    int size() const { return nx * ny; }
    double cell_measure() const { return hx * hy; }

    int wrap_x(int ix) const {
        ix %= nx;
        return ix < 0 ? ix + nx : ix;
    }
    int wrap_y(int iy) const {
        iy %= ny;
        return iy < 0 ? iy + ny : iy;
    }
    int index(int ix, int iy) const { return iy * nx + ix; }
    int index_wrap(int ix, int iy) const { return index(wrap_x(ix), wrap_y(iy)); }

    double x(int ix) const { return ix * hx; }
    double y(int iy) const { return iy * hy; }

    bool operator==(const Grid& o) const { return nx == o.nx && ny == o.ny; }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

struct ScalarField {
    Grid grid;
    std::vector<double> v;

    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0)
        : grid(g), v(static_cast<std::size_t>(g.size()), fill) {}

    double& operator()(int ix, int iy) { return v[grid.index(ix, iy)]; }
    double operator()(int ix, int iy) const { return v[grid.index(ix, iy)]; }
    double at_wrap(int ix, int iy) const { return v[grid.index_wrap(ix, iy)]; }
};

/// Tangent vector field (ux, uy) on the torus.
struct VectorField {
    Grid grid;
    std::vector<double> ux;
    std::vector<double> uy;

    VectorField() = default;
    explicit VectorField(const Grid& g)
        : grid(g),
          ux(static_cast<std::size_t>(g.size()), 0.0),
          uy(static_cast<std::size_t>(g.size()), 0.0) {}
};

/// d-channel control field; channel i weights generator i pointwise.
struct MultiField {
    std::vector<ScalarField> channel;

    MultiField() = default;
    MultiField(const Grid& g, int channels)
        : channel(static_cast<std::size_t>(channels), ScalarField(g)) {
        if (channels < 1) throw config_error("MultiField: channels must be >= 1");
    }

    int channels() const { return static_cast<int>(channel.size()); }
    const Grid& grid() const { return channel.at(0).grid; }
};

void require_same_grid(const Grid& a, const Grid& b, const char* where);
void require_finite(const ScalarField& f, const char* where);
void require_finite(const VectorField& f, const char* where);

// ---- L2 calculus ----------------------------------------------------------

/// Sum over cells, weighted by the cell measure.
double integrate(const ScalarField& f);

/// <f, g> = sum f*g*mu. Symmetric, bilinear.
double inner_product(const ScalarField& f, const ScalarField& g);
double inner_product(const VectorField& a, const VectorField& b);
/// Channel-wise sum of scalar inner products.
double inner_product(const MultiField& a, const MultiField& b);

double norm(const ScalarField& f);
double norm(const VectorField& f);
double norm(const MultiField& f);

/// Central differences with periodic wrap; exact on constants.
VectorField grad(const ScalarField& f);

/// Central-difference divergence, the negative adjoint of grad.
ScalarField divergence(const VectorField& u);

/// Geometric Laplacian -div(grad f), nonnegative convention.
///
/// Built as the exact composition of the central-difference grad with its
/// adjoint, so <lap f, g> == <grad f, grad g> to roundoff for any fields.
ScalarField laplacian(const ScalarField& f);

// ---- arithmetic helpers ----------------------------------------------------

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double s, const ScalarField& a);
ScalarField& operator+=(ScalarField& a, const ScalarField& b);
void axpy(double s, const ScalarField& x, ScalarField& y);  // y += s*x

MultiField operator+(const MultiField& a, const MultiField& b);
MultiField operator*(double s, const MultiField& a);

/// Integer circular shift: result(ix, iy) = f(ix - kx, iy - ky), exact.
ScalarField shift(const ScalarField& f, int kx, int ky);

/// Band-limited random field: modes up to max_mode with Gaussian weights.
ScalarField random_smooth_field(const Grid& g, int max_mode, Rng& rng);

/// Uniform i.i.d. noise in [-amplitude, amplitude] per cell and channel.
MultiField random_noise_multifield(const Grid& g, int channels, double amplitude,
                                   Rng& rng);

}  // namespace gaugeflow
