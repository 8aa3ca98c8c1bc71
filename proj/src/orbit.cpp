#include "gaugeflow/orbit.hpp"

namespace gaugeflow {

OrbitBasis orbit_basis(const ScalarField& S, const GeneratorBasis& basis) {
    OrbitBasis out;
    out.e.reserve(basis.size());
    for (const Generator& g : basis.gens) out.e.push_back(orbit_direction(S, g));
    return out;
}

GramData gram(const OrbitBasis& basis, double cutoff) {
    const int d = basis.size();
    if (d < 1) throw config_error("gram: empty basis");
    GramData out;
    out.cutoff = cutoff;
    out.G.resize(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double gij = inner_product(basis.e[i], basis.e[j]);
            out.G(i, j) = gij;
            out.G(j, i) = gij;
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out.G);
    const Eigen::VectorXd lambda = es.eigenvalues();
    const double lambda_max = lambda.maxCoeff();
    const double floor = cutoff * std::max(lambda_max, 0.0);

    Eigen::VectorXd inv = Eigen::VectorXd::Zero(d);
    out.rank = 0;
    for (int i = 0; i < d; ++i) {
        if (lambda(i) > floor && lambda(i) > 0.0) {
            inv(i) = 1.0 / lambda(i);
            ++out.rank;
        }
    }
    out.Gplus = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
    return out;
}

Eigen::VectorXd correlations(const ScalarField& r, const OrbitBasis& basis) {
    Eigen::VectorXd b(basis.size());
    for (int i = 0; i < basis.size(); ++i) b(i) = inner_product(r, basis.e[i]);
    return b;
}

Projection project(const ScalarField& f, const OrbitBasis& basis, const GramData& g) {
    const Eigen::VectorXd b = correlations(f, basis);
    const Eigen::VectorXd c = g.Gplus * b;
    ScalarField tangent(f.grid);
    for (int i = 0; i < basis.size(); ++i) axpy(c(i), basis.e[i], tangent);
    Projection out{tangent, f - tangent};
    return out;
}

}  // namespace gaugeflow
