#pragma once

#include <string>
#include <vector>

#include "gaugeflow/fields.hpp"

namespace gaugeflow {

enum class GeneratorKind { TranslateX, TranslateY, Rotate, Dilate, ShearX, Custom };

std::string to_string(GeneratorKind k);
GeneratorKind generator_kind_from_string(const std::string& name);

/// One infinitesimal symmetry, realized as a vector field on the grid.
///
/// The translations are exact torus symmetries. Rotate/Dilate/ShearX are
/// centered at (0.5, 0.5) and are not exact isometries of the periodic
/// domain, hence `approximate_symmetry`.
struct Generator {
    GeneratorKind kind = GeneratorKind::TranslateX;
    VectorField field;
    bool approximate_symmetry = false;
};

Generator make_generator(GeneratorKind kind, const Grid& grid);
Generator make_custom_generator(const VectorField& field);

/// The vector field a generator induces on a grid.
VectorField generator_field(const Generator& g, const Grid& grid);

struct GeneratorBasis {
    std::vector<Generator> gens;

    int size() const { return static_cast<int>(gens.size()); }
    const Grid& grid() const { return gens.at(0).field.grid; }
};

GeneratorBasis make_basis(const std::vector<GeneratorKind>& kinds, const Grid& grid);

struct FlowConfig {
    double t = 1.0;
    int substeps = 8;

    FlowConfig() = default;
    FlowConfig(double t_, int substeps_) : t(t_), substeps(substeps_) {
        if (substeps < 1) throw config_error("FlowConfig: substeps must be >= 1");
    }
};

/// Pointwise combination A_phi(x) = sum_i phi_i(x) X_i(x).
VectorField assemble(const GeneratorBasis& basis, const MultiField& phi);

/// Periodic bilinear sample of a scalar field at continuous coordinates.
double sample_bilinear(const ScalarField& f, double x, double y);

/// Pullback of S by the time-t flow of X.
///
/// Each node is transported backward along dx/ds = -X(x) with RK4 in
/// cfg.substeps steps (velocity read by periodic bilinear interpolation),
/// then S is sampled at the departure point. t = 0 or X == 0 returns S
/// bit-exactly.
ScalarField warp(const ScalarField& S, const VectorField& X, const FlowConfig& cfg);

/// Orbit direction e_i = -(X_i . grad S): the first-order change of S under
/// the generator flow, so warp(S, A_phi, t) == S + t*sum_i phi_i e_i + O(t^2).
ScalarField orbit_direction(const ScalarField& S, const Generator& g);

/// r_lin = sum_i phi_i e_i.
ScalarField linearized_residual(const ScalarField& S, const GeneratorBasis& basis,
                                const MultiField& phi);

}  // namespace gaugeflow
