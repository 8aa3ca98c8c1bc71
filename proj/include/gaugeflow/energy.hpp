#pragma once

#include "gaugeflow/fields.hpp"
#include "gaugeflow/lieflow.hpp"
#include "gaugeflow/orbit.hpp"

namespace gaugeflow {

enum class DataVariant { A, B };      // ambient misfit vs projected misfit
enum class FlowMode { Linearized, Nonlinear };

/// Weights and mode of the gauge energy
///   E[phi] = data + alpha*||grad phi||^2 + beta*|| |phi|^2 - v^2 ||^2.
struct EnergyConfig {
    double alpha = 0.1;
    double beta = 10.0;
    double v = 0.2;
    DataVariant variant = DataVariant::A;
    FlowMode flow = FlowMode::Linearized;
    double t = 1.0;      // flow time in nonlinear mode
    int substeps = 8;

    void validate() const {
        if (alpha < 0.0) throw config_error("EnergyConfig: alpha must be >= 0");
        if (beta <= 0.0) throw config_error("EnergyConfig: beta must be > 0");
        if (v <= 0.0) throw config_error("EnergyConfig: v must be > 0");
        if (flow == FlowMode::Nonlinear && t <= 0.0)
            throw config_error("EnergyConfig: t must be > 0 in nonlinear mode");
        if (substeps < 1) throw config_error("EnergyConfig: substeps must be >= 1");
    }
};

/// Weak coupling of the gauge energy to a task normal:
///   E_weak[a,phi] = E_b[phi] + lambda*(<nhat,r> - eps_star)^2
///                 + eta*(||r||^2 - <nhat,r>^2),   r = warp(S, a*A_phi) - S.
struct WeakConfig {
    double lambda = 1e4;
    double eta = 10.0;
    double eps_star = 0.0;
    // Initial scalar gain (flow time), an optimization variable. The bilinear
    // resampling inside the warp damps <nhat, r> at rate O(|a|), which can
    // turn a = 0 into a spurious one-sided minimum of the hit penalty; a
    // nonzero seed starts the joint descent past that kink.
    double a0 = 0.5;
    ScalarField nhat;      // unit-norm target direction

    void validate() const {
        if (lambda <= 0.0) throw config_error("WeakConfig: lambda must be > 0");
        if (eta < 0.0) throw config_error("WeakConfig: eta must be >= 0");
        const double n = norm(nhat);
        if (std::abs(n - 1.0) > 1e-10)
            throw config_error("WeakConfig: nhat must have unit norm");
    }
};

struct WeakGradient {
    double d_a = 0.0;
    MultiField d_phi;
};

/// Energy evaluator with the signal-dependent pieces (orbit directions,
/// Gram pseudoinverse) computed once. The finite-difference gradients call
/// value() per cell, so this caching is what keeps them affordable.
class EnergyModel {
public:
    EnergyModel(ScalarField S, GeneratorBasis basis, EnergyConfig cfg);

    double value(const MultiField& phi) const;
    MultiField gradient(const MultiField& phi) const;
    ScalarField residual(const MultiField& phi) const;
    Eigen::VectorXd constraint_residual(const MultiField& phi) const;

    double weak_value(double a, const MultiField& phi, const WeakConfig& wcfg) const;
    WeakGradient weak_gradient(double a, const MultiField& phi,
                               const WeakConfig& wcfg) const;

    const ScalarField& signal() const { return S_; }
    const GeneratorBasis& basis() const { return basis_; }
    const EnergyConfig& config() const { return cfg_; }
    const OrbitBasis& orbit() const { return ob_; }
    const GramData& gram_data() const { return gd_; }

private:
    double data_term(const ScalarField& r) const;
    ScalarField warped_residual(double a, const MultiField& phi) const;

    ScalarField S_;
    GeneratorBasis basis_;
    EnergyConfig cfg_;
    OrbitBasis ob_;
    GramData gd_;
};

// Free-function surface over EnergyModel.

/// Deformation r: sum_i phi_i e_i (linearized) or warp(S, A_phi, t) - S.
ScalarField residual(const ScalarField& S, const GeneratorBasis& basis,
                     const MultiField& phi, const EnergyConfig& cfg);

double energy(const ScalarField& S, const GeneratorBasis& basis,
              const MultiField& phi, const EnergyConfig& cfg);

/// Gradient of the energy in phi.
///
/// Linearized mode is analytic and matches the directional derivative to
/// roundoff; nonlinear mode falls back to central differences per cell
/// (step 1e-4 * (1 + max|phi|)).
MultiField grad_energy(const ScalarField& S, const GeneratorBasis& basis,
                       const MultiField& phi, const EnergyConfig& cfg);

/// Residual of the constant-variation constraints:
///   c_i = <e_i, r> + 2*beta*< |phi|^2 - v^2, phi_i >.
/// Small at converged minimizers of either variant.
Eigen::VectorXd constraint_residual(const ScalarField& S, const GeneratorBasis& basis,
                                    const MultiField& phi, const EnergyConfig& cfg);

double weak_energy(const ScalarField& S, const GeneratorBasis& basis, double a,
                   const MultiField& phi, const EnergyConfig& cfg,
                   const WeakConfig& wcfg);

/// Central finite differences in a and per cell in phi.
WeakGradient grad_weak(const ScalarField& S, const GeneratorBasis& basis, double a,
                       const MultiField& phi, const EnergyConfig& cfg,
                       const WeakConfig& wcfg);

// Shared pieces, also used by tests and the optimizer.
double double_well_term(const MultiField& phi, double beta, double v);
double kinetic_term(const MultiField& phi, double alpha);

}  // namespace gaugeflow
