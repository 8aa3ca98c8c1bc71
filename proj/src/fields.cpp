#include "gaugeflow/fields.hpp"

#include <cmath>
#include <string>

namespace gaugeflow {

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
    if (a != b) {
        throw conformability_error(std::string(where) + ": grid mismatch (" +
                                   std::to_string(a.nx) + "x" + std::to_string(a.ny) +
                                   " vs " + std::to_string(b.nx) + "x" +
                                   std::to_string(b.ny) + ")");
    }
}

void require_finite(const ScalarField& f, const char* where) {
    for (double x : f.v) {
        if (!std::isfinite(x)) throw numeric_error(std::string(where) + ": non-finite value");
    }
}

void require_finite(const VectorField& f, const char* where) {
    for (double x : f.ux) {
        if (!std::isfinite(x)) throw numeric_error(std::string(where) + ": non-finite value");
    }
    for (double x : f.uy) {
        if (!std::isfinite(x)) throw numeric_error(std::string(where) + ": non-finite value");
    }
}

double integrate(const ScalarField& f) {
    double s = 0.0;
    for (double x : f.v) s += x;
    return s * f.grid.cell_measure();
}

double inner_product(const ScalarField& f, const ScalarField& g) {
    require_same_grid(f.grid, g.grid, "inner_product");
    double s = 0.0;
    for (std::size_t i = 0; i < f.v.size(); ++i) s += f.v[i] * g.v[i];
    return s * f.grid.cell_measure();
}

double inner_product(const VectorField& a, const VectorField& b) {
    require_same_grid(a.grid, b.grid, "inner_product");
    double s = 0.0;
    for (std::size_t i = 0; i < a.ux.size(); ++i)
        s += a.ux[i] * b.ux[i] + a.uy[i] * b.uy[i];
    return s * a.grid.cell_measure();
}

double inner_product(const MultiField& a, const MultiField& b) {
    if (a.channels() != b.channels())
        throw conformability_error("inner_product: channel count mismatch");
    double s = 0.0;
    for (int c = 0; c < a.channels(); ++c) s += inner_product(a.channel[c], b.channel[c]);
    return s;
}

double norm(const ScalarField& f) { return std::sqrt(inner_product(f, f)); }
double norm(const VectorField& f) { return std::sqrt(inner_product(f, f)); }
double norm(const MultiField& f) { return std::sqrt(inner_product(f, f)); }

VectorField grad(const ScalarField& f) {
    const Grid& g = f.grid;
    VectorField out(g);
    const double cx = 1.0 / (2.0 * g.hx);
    const double cy = 1.0 / (2.0 * g.hy);
    for (int iy = 0; iy < g.ny; ++iy) {
        const int yp = g.wrap_y(iy + 1), ym = g.wrap_y(iy - 1);
        for (int ix = 0; ix < g.nx; ++ix) {
            const int xp = g.wrap_x(ix + 1), xm = g.wrap_x(ix - 1);
            const int k = g.index(ix, iy);
            out.ux[k] = (f.v[g.index(xp, iy)] - f.v[g.index(xm, iy)]) * cx;
            out.uy[k] = (f.v[g.index(ix, yp)] - f.v[g.index(ix, ym)]) * cy;
        }
    }
    return out;
}

ScalarField divergence(const VectorField& u) {
    const Grid& g = u.grid;
    ScalarField out(g);
    const double cx = 1.0 / (2.0 * g.hx);
    const double cy = 1.0 / (2.0 * g.hy);
    for (int iy = 0; iy < g.ny; ++iy) {
        const int yp = g.wrap_y(iy + 1), ym = g.wrap_y(iy - 1);
        for (int ix = 0; ix < g.nx; ++ix) {
            const int xp = g.wrap_x(ix + 1), xm = g.wrap_x(ix - 1);
            out.v[g.index(ix, iy)] =
                (u.ux[g.index(xp, iy)] - u.ux[g.index(xm, iy)]) * cx +
                (u.uy[g.index(ix, yp)] - u.uy[g.index(ix, ym)]) * cy;
        }
    }
    return out;
}

ScalarField laplacian(const ScalarField& f) {
    ScalarField out = divergence(grad(f));
    for (double& x : out.v) x = -x;
    return out;
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid, b.grid, "operator+");
    ScalarField out = a;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += b.v[i];
    return out;
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid, b.grid, "operator-");
    ScalarField out = a;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] -= b.v[i];
    return out;
}

ScalarField operator*(double s, const ScalarField& a) {
    ScalarField out = a;
    for (double& x : out.v) x *= s;
    return out;
}

ScalarField& operator+=(ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid, b.grid, "operator+=");
    for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] += b.v[i];
    return a;
}

void axpy(double s, const ScalarField& x, ScalarField& y) {
    require_same_grid(x.grid, y.grid, "axpy");
    for (std::size_t i = 0; i < y.v.size(); ++i) y.v[i] += s * x.v[i];
}

MultiField operator+(const MultiField& a, const MultiField& b) {
    if (a.channels() != b.channels())
        throw conformability_error("operator+: channel count mismatch");
    MultiField out = a;
    for (int c = 0; c < out.channels(); ++c) out.channel[c] += b.channel[c];
    return out;
}

MultiField operator*(double s, const MultiField& a) {
    MultiField out = a;
    for (auto& ch : out.channel)
        for (double& x : ch.v) x *= s;
    return out;
}

ScalarField shift(const ScalarField& f, int kx, int ky) {
    const Grid& g = f.grid;
    ScalarField out(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix)
            out.v[g.index(ix, iy)] = f.at_wrap(ix - kx, iy - ky);
    return out;
}

ScalarField random_smooth_field(const Grid& g, int max_mode, Rng& rng) {
    ScalarField out(g);
    const double two_pi = 6.283185307179586476925286766559;
    for (int mx = 0; mx <= max_mode; ++mx) {
        for (int my = 0; my <= max_mode; ++my) {
            if (mx == 0 && my == 0) continue;
            const double a = rng.gaussian();
            const double b = rng.gaussian();
            for (int iy = 0; iy < g.ny; ++iy) {
                const double py = two_pi * my * g.y(iy);
                for (int ix = 0; ix < g.nx; ++ix) {
                    const double phase = two_pi * mx * g.x(ix) + py;
                    out.v[g.index(ix, iy)] += a * std::cos(phase) + b * std::sin(phase);
                }
            }
        }
    }
    return out;
}

MultiField random_noise_multifield(const Grid& g, int channels, double amplitude,
                                   Rng& rng) {
    MultiField out(g, channels);
    for (auto& ch : out.channel)
        for (double& x : ch.v) x = amplitude * (2.0 * rng.uniform() - 1.0);
    return out;
}

}  // namespace gaugeflow
