#include "gaugeflow/lieflow.hpp"

#include <algorithm>
#include <cmath>

namespace gaugeflow {

std::string to_string(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::TranslateX: return "translate_x";
        case GeneratorKind::TranslateY: return "translate_y";
        case GeneratorKind::Rotate: return "rotate";
        case GeneratorKind::Dilate: return "dilate";
        case GeneratorKind::ShearX: return "shear_x";
        case GeneratorKind::Custom: return "custom";
    }
    return "?";
}

GeneratorKind generator_kind_from_string(const std::string& name) {
    if (name == "translate_x") return GeneratorKind::TranslateX;
    if (name == "translate_y") return GeneratorKind::TranslateY;
    if (name == "rotate") return GeneratorKind::Rotate;
    if (name == "dilate") return GeneratorKind::Dilate;
    if (name == "shear_x") return GeneratorKind::ShearX;
    if (name == "custom") return GeneratorKind::Custom;
    throw config_error("unknown generator kind: " + name);
}

VectorField generator_field(const Generator& g, const Grid& grid) {
    if (g.kind == GeneratorKind::Custom) {
        require_same_grid(g.field.grid, grid, "generator_field");
        return g.field;
    }
    VectorField out(grid);
    for (int iy = 0; iy < grid.ny; ++iy) {
        const double y = grid.y(iy) - 0.5;
        for (int ix = 0; ix < grid.nx; ++ix) {
            const double x = grid.x(ix) - 0.5;
            const int k = grid.index(ix, iy);
            switch (g.kind) {
                case GeneratorKind::TranslateX: out.ux[k] = 1.0; break;
                case GeneratorKind::TranslateY: out.uy[k] = 1.0; break;
                case GeneratorKind::Rotate:
                    out.ux[k] = -y;
                    out.uy[k] = x;
                    break;
                case GeneratorKind::Dilate:
                    out.ux[k] = x;
                    out.uy[k] = y;
                    break;
                case GeneratorKind::ShearX: out.ux[k] = y; break;
                case GeneratorKind::Custom: break;
            }
        }
    }
    return out;
}

Generator make_generator(GeneratorKind kind, const Grid& grid) {
    if (kind == GeneratorKind::Custom)
        throw config_error("make_generator: custom generators need a field");
    Generator g;
    g.kind = kind;
    g.approximate_symmetry =
        kind != GeneratorKind::TranslateX && kind != GeneratorKind::TranslateY;
    g.field = generator_field(g, grid);
    return g;
}

Generator make_custom_generator(const VectorField& field) {
    require_finite(field, "make_custom_generator");
    Generator g;
    g.kind = GeneratorKind::Custom;
    g.approximate_symmetry = true;
    g.field = field;
    return g;
}

GeneratorBasis make_basis(const std::vector<GeneratorKind>& kinds, const Grid& grid) {
    GeneratorBasis basis;
    for (GeneratorKind k : kinds) basis.gens.push_back(make_generator(k, grid));
    if (basis.size() < 1) throw config_error("make_basis: need at least one generator");
    return basis;
}

VectorField assemble(const GeneratorBasis& basis, const MultiField& phi) {
    if (phi.channels() != basis.size())
        throw conformability_error("assemble: phi channels != basis size");
    const Grid& grid = basis.grid();
    require_same_grid(grid, phi.grid(), "assemble");
    VectorField out(grid);
    for (int i = 0; i < basis.size(); ++i) {
        const VectorField& X = basis.gens[i].field;
        const std::vector<double>& w = phi.channel[i].v;
        for (std::size_t k = 0; k < out.ux.size(); ++k) {
            out.ux[k] += w[k] * X.ux[k];
            out.uy[k] += w[k] * X.uy[k];
        }
    }
    return out;
}

double sample_bilinear(const ScalarField& f, double x, double y) {
    const Grid& g = f.grid;
    const double gx = x / g.hx;
    const double gy = y / g.hy;
    const double fx = std::floor(gx);
    const double fy = std::floor(gy);
    const double wx = gx - fx;
    const double wy = gy - fy;
    const int ix = g.wrap_x(static_cast<int>(fx) % g.nx);
    const int iy = g.wrap_y(static_cast<int>(fy) % g.ny);
    const int ixp = g.wrap_x(ix + 1);
    const int iyp = g.wrap_y(iy + 1);
    const double f00 = f.v[g.index(ix, iy)];
    const double f10 = f.v[g.index(ixp, iy)];
    const double f01 = f.v[g.index(ix, iyp)];
    const double f11 = f.v[g.index(ixp, iyp)];
    return (1.0 - wy) * ((1.0 - wx) * f00 + wx * f10) +
           wy * ((1.0 - wx) * f01 + wx * f11);
}

namespace {

struct Vec2 {
    double x, y;
};

// Bilinear read of both velocity components at a continuous point.
inline Vec2 sample_velocity(const VectorField& X, double x, double y) {
    const Grid& g = X.grid;
    const double gx = x / g.hx;
    const double gy = y / g.hy;
    const double fx = std::floor(gx);
    const double fy = std::floor(gy);
    const double wx = gx - fx;
    const double wy = gy - fy;
    const int ix = g.wrap_x(static_cast<int>(fx) % g.nx);
    const int iy = g.wrap_y(static_cast<int>(fy) % g.ny);
    const int ixp = g.wrap_x(ix + 1);
    const int iyp = g.wrap_y(iy + 1);
    const int k00 = g.index(ix, iy), k10 = g.index(ixp, iy);
    const int k01 = g.index(ix, iyp), k11 = g.index(ixp, iyp);
    const double w00 = (1.0 - wx) * (1.0 - wy), w10 = wx * (1.0 - wy);
    const double w01 = (1.0 - wx) * wy, w11 = wx * wy;
    return {w00 * X.ux[k00] + w10 * X.ux[k10] + w01 * X.ux[k01] + w11 * X.ux[k11],
            w00 * X.uy[k00] + w10 * X.uy[k10] + w01 * X.uy[k01] + w11 * X.uy[k11]};
}

}  // namespace

ScalarField warp(const ScalarField& S, const VectorField& X, const FlowConfig& cfg) {
    require_same_grid(S.grid, X.grid, "warp");
    require_finite(X, "warp");
    if (cfg.substeps < 1) throw config_error("warp: substeps must be >= 1");

    bool zero_field = true;
    for (std::size_t k = 0; k < X.ux.size() && zero_field; ++k)
        zero_field = X.ux[k] == 0.0 && X.uy[k] == 0.0;
    if (cfg.t == 0.0 || zero_field) return S;

    const Grid& g = S.grid;
    ScalarField out(g);
    const double dt = cfg.t / cfg.substeps;
    for (int iy = 0; iy < g.ny; ++iy) {
        for (int ix = 0; ix < g.nx; ++ix) {
            // Backward characteristic: dx/ds = -X(x), s in [0, t].
            double px = g.x(ix);
            double py = g.y(iy);
            for (int s = 0; s < cfg.substeps; ++s) {
                const Vec2 k1 = sample_velocity(X, px, py);
                const Vec2 k2 = sample_velocity(X, px - 0.5 * dt * k1.x, py - 0.5 * dt * k1.y);
                const Vec2 k3 = sample_velocity(X, px - 0.5 * dt * k2.x, py - 0.5 * dt * k2.y);
                const Vec2 k4 = sample_velocity(X, px - dt * k3.x, py - dt * k3.y);
                px -= dt / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
                py -= dt / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
            }
            out.v[g.index(ix, iy)] = sample_bilinear(S, px, py);
        }
    }
    return out;
}

ScalarField orbit_direction(const ScalarField& S, const Generator& g) {
    require_same_grid(S.grid, g.field.grid, "orbit_direction");
    const VectorField gS = grad(S);
    ScalarField e(S.grid);
    for (std::size_t k = 0; k < e.v.size(); ++k)
        e.v[k] = -(g.field.ux[k] * gS.ux[k] + g.field.uy[k] * gS.uy[k]);
    return e;
}

ScalarField linearized_residual(const ScalarField& S, const GeneratorBasis& basis,
                                const MultiField& phi) {
    if (phi.channels() != basis.size())
        throw conformability_error("linearized_residual: phi channels != basis size");
    ScalarField r(S.grid);
    for (int i = 0; i < basis.size(); ++i) {
        const ScalarField e = orbit_direction(S, basis.gens[i]);
        for (std::size_t k = 0; k < r.v.size(); ++k)
            r.v[k] += phi.channel[i].v[k] * e.v[k];
    }
    return r;
}

}  // namespace gaugeflow
