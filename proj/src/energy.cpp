#include "gaugeflow/energy.hpp"

#include <algorithm>
#include <cmath>

namespace gaugeflow {

namespace {

// |phi(x)|^2 - v^2, the double-well argument.
ScalarField well_argument(const MultiField& phi, double v) {
    ScalarField w(phi.grid());
    for (const auto& ch : phi.channel)
        for (std::size_t k = 0; k < w.v.size(); ++k) w.v[k] += ch.v[k] * ch.v[k];
    for (double& x : w.v) x -= v * v;
    return w;
}

double fd_step(const MultiField& phi) {
    double max_abs = 0.0;
    for (const auto& ch : phi.channel)
        for (double x : ch.v) max_abs = std::max(max_abs, std::abs(x));
    return 1e-4 * (1.0 + max_abs);
}

}  // namespace

double double_well_term(const MultiField& phi, double beta, double v) {
    const ScalarField w = well_argument(phi, v);
    return beta * inner_product(w, w);
}

double kinetic_term(const MultiField& phi, double alpha) {
    if (alpha == 0.0) return 0.0;
    double s = 0.0;
    for (const auto& ch : phi.channel) {
        const VectorField g = grad(ch);
        s += inner_product(g, g);
    }
    return alpha * s;
}

EnergyModel::EnergyModel(ScalarField S, GeneratorBasis basis, EnergyConfig cfg)
    : S_(std::move(S)), basis_(std::move(basis)), cfg_(cfg) {
    cfg_.validate();
    require_finite(S_, "EnergyModel");
    ob_ = orbit_basis(S_, basis_);
    gd_ = gram(ob_);
}

ScalarField EnergyModel::residual(const MultiField& phi) const {
    if (phi.channels() != basis_.size())
        throw conformability_error("residual: phi channels != basis size");
    if (cfg_.flow == FlowMode::Linearized) {
        ScalarField r(S_.grid);
        for (int i = 0; i < basis_.size(); ++i)
            for (std::size_t k = 0; k < r.v.size(); ++k)
                r.v[k] += phi.channel[i].v[k] * ob_.e[i].v[k];
        return r;
    }
    const VectorField A = assemble(basis_, phi);
    return warp(S_, A, FlowConfig(cfg_.t, cfg_.substeps)) - S_;
}

double EnergyModel::data_term(const ScalarField& r) const {
    if (cfg_.variant == DataVariant::A) return inner_product(r, r);
    const Eigen::VectorXd b = correlations(r, ob_);
    return b.dot(gd_.Gplus * b);
}

double EnergyModel::value(const MultiField& phi) const {
    const ScalarField r = residual(phi);
    return data_term(r) + kinetic_term(phi, cfg_.alpha) +
           double_well_term(phi, cfg_.beta, cfg_.v);
}

MultiField EnergyModel::gradient(const MultiField& phi) const {
    const int d = basis_.size();
    MultiField g(phi.grid(), d);

    if (cfg_.flow == FlowMode::Nonlinear) {
        // No adjoint of the semi-Lagrangian warp; central differences per
        // cell. Dividing by the cell measure converts the Euclidean partial
        // dE/dphi_k into the L2 functional gradient, the convention the
        // analytic path uses.
        const double h = fd_step(phi);
        const double mu = phi.grid().cell_measure();
        MultiField probe = phi;
        for (int c = 0; c < d; ++c) {
            for (std::size_t k = 0; k < probe.channel[c].v.size(); ++k) {
                const double saved = probe.channel[c].v[k];
                probe.channel[c].v[k] = saved + h;
                const double ep = value(probe);
                probe.channel[c].v[k] = saved - h;
                const double em = value(probe);
                probe.channel[c].v[k] = saved;
                g.channel[c].v[k] = (ep - em) / (2.0 * h * mu);
            }
        }
        return g;
    }

    const ScalarField r = residual(phi);

    // Data factor: r itself for variant (a), its orbit projection for (b).
    ScalarField data_field = r;
    if (cfg_.variant == DataVariant::B) data_field = project(r, ob_, gd_).tangent;

    const ScalarField w = well_argument(phi, cfg_.v);
    for (int c = 0; c < d; ++c) {
        const ScalarField lap =
            cfg_.alpha != 0.0 ? laplacian(phi.channel[c]) : ScalarField(phi.grid());
        for (std::size_t k = 0; k < g.channel[c].v.size(); ++k) {
            g.channel[c].v[k] = 2.0 * ob_.e[c].v[k] * data_field.v[k] +
                                2.0 * cfg_.alpha * lap.v[k] +
                                4.0 * cfg_.beta * w.v[k] * phi.channel[c].v[k];
        }
    }
    return g;
}

Eigen::VectorXd EnergyModel::constraint_residual(const MultiField& phi) const {
    const ScalarField r = residual(phi);
    const ScalarField w = well_argument(phi, cfg_.v);
    Eigen::VectorXd out(basis_.size());
    for (int i = 0; i < basis_.size(); ++i)
        out(i) = inner_product(ob_.e[i], r) +
                 2.0 * cfg_.beta * inner_product(w, phi.channel[i]);
    return out;
}

ScalarField EnergyModel::warped_residual(double a, const MultiField& phi) const {
    const VectorField A = assemble(basis_, phi);
    return warp(S_, A, FlowConfig(a, cfg_.substeps)) - S_;
}

double EnergyModel::weak_value(double a, const MultiField& phi,
                               const WeakConfig& wcfg) const {
    if (cfg_.variant != DataVariant::B)
        throw config_error("weak_energy: geometric part must use variant b");
    wcfg.validate();
    require_same_grid(S_.grid, wcfg.nhat.grid, "weak_energy");

    const ScalarField r = warped_residual(a, phi);
    const double hit = inner_product(wcfg.nhat, r);
    const double misalign = inner_product(r, r) - hit * hit;
    return value(phi) + wcfg.lambda * (hit - wcfg.eps_star) * (hit - wcfg.eps_star) +
           wcfg.eta * misalign;
}

WeakGradient EnergyModel::weak_gradient(double a, const MultiField& phi,
                                        const WeakConfig& wcfg) const {
    WeakGradient g;
    g.d_phi = MultiField(phi.grid(), phi.channels());

    // A tighter step than the per-cell one: the residual of the boundary-hit
    // penalty resolves down to rho * ha, and the scalar direction is cheap.
    const double ha = 1e-6 * (1.0 + std::abs(a));
    g.d_a = (weak_value(a + ha, phi, wcfg) - weak_value(a - ha, phi, wcfg)) /
            (2.0 * ha);

    // L2 convention as in gradient(): divide the per-cell partials by mu.
    const double h = fd_step(phi);
    const double mu = phi.grid().cell_measure();
    MultiField probe = phi;
    for (int c = 0; c < phi.channels(); ++c) {
        for (std::size_t k = 0; k < probe.channel[c].v.size(); ++k) {
            const double saved = probe.channel[c].v[k];
            probe.channel[c].v[k] = saved + h;
            const double ep = weak_value(a, probe, wcfg);
            probe.channel[c].v[k] = saved - h;
            const double em = weak_value(a, probe, wcfg);
            probe.channel[c].v[k] = saved;
            g.d_phi.channel[c].v[k] = (ep - em) / (2.0 * h * mu);
        }
    }
    return g;
}

ScalarField residual(const ScalarField& S, const GeneratorBasis& basis,
                     const MultiField& phi, const EnergyConfig& cfg) {
    return EnergyModel(S, basis, cfg).residual(phi);
}

double energy(const ScalarField& S, const GeneratorBasis& basis,
              const MultiField& phi, const EnergyConfig& cfg) {
    return EnergyModel(S, basis, cfg).value(phi);
}

MultiField grad_energy(const ScalarField& S, const GeneratorBasis& basis,
                       const MultiField& phi, const EnergyConfig& cfg) {
    return EnergyModel(S, basis, cfg).gradient(phi);
}

Eigen::VectorXd constraint_residual(const ScalarField& S, const GeneratorBasis& basis,
                                    const MultiField& phi, const EnergyConfig& cfg) {
    return EnergyModel(S, basis, cfg).constraint_residual(phi);
}

double weak_energy(const ScalarField& S, const GeneratorBasis& basis, double a,
                   const MultiField& phi, const EnergyConfig& cfg,
                   const WeakConfig& wcfg) {
    return EnergyModel(S, basis, cfg).weak_value(a, phi, wcfg);
}

WeakGradient grad_weak(const ScalarField& S, const GeneratorBasis& basis, double a,
                       const MultiField& phi, const EnergyConfig& cfg,
                       const WeakConfig& wcfg) {
    return EnergyModel(S, basis, cfg).weak_gradient(a, phi, wcfg);
}

}  // namespace gaugeflow
