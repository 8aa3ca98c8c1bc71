#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gaugeflow/fields.hpp"
#include "gaugeflow/lieflow.hpp"

namespace gaugeflow {

/// Orbit directions e_i = L_i[S]; their span is the orbit tangent space.
struct OrbitBasis {
    std::vector<ScalarField> e;

    int size() const { return static_cast<int>(e.size()); }
    const Grid& grid() const { return e.at(0).grid; }
};

OrbitBasis orbit_basis(const ScalarField& S, const GeneratorBasis& basis);

/// Gram matrix of the orbit directions with its pseudoinverse.
///
/// Eigenvalues below cutoff * lambda_max are treated as zero, so stabilizer
/// directions (e_i that vanish or coincide) drop rank silently.
struct GramData {
    Eigen::MatrixXd G;
    Eigen::MatrixXd Gplus;
    int rank = 0;
    double cutoff = 1e-10;
};

GramData gram(const OrbitBasis& basis, double cutoff = 1e-10);

/// b_i = <r, e_i>.
Eigen::VectorXd correlations(const ScalarField& r, const OrbitBasis& basis);

struct Projection {
    ScalarField tangent;
    ScalarField normal;
};

/// L2-orthogonal split f = P f + (I - P) f against span{e_i}.
Projection project(const ScalarField& f, const OrbitBasis& basis, const GramData& g);

}  // namespace gaugeflow
