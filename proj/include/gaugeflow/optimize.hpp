#pragma once

#include <functional>
#include <vector>

#include "gaugeflow/energy.hpp"
#include "gaugeflow/rng.hpp"

namespace gaugeflow {

struct OptConfig {
    double step = 0.05;
    int max_iters = 500;
    double grad_tol = 1e-6;   // relative to the initial gradient norm
    double beta1 = 0.9;
    double beta2 = 0.999;
    std::uint64_t seed = 0;

    void validate() const {
        if (step <= 0.0) throw config_error("OptConfig: step must be > 0");
        if (max_iters < 1) throw config_error("OptConfig: max_iters must be >= 1");
    }
};

struct Trace {
    std::vector<double> energies;      // value after each accepted iterate
    std::vector<double> grad_norms;
    double final_grad_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct MinimizeResult {
    MultiField phi;
    Trace trace;
};

/// Adaptive-moment descent on the gauge energy. The step is halved (at most
/// 20 times per iteration) whenever the trial iterate raises the energy, and
/// the best iterate seen is returned.
MinimizeResult minimize(const EnergyModel& model, const MultiField& phi0,
                        const OptConfig& ocfg);

MinimizeResult minimize(const ScalarField& S, const GeneratorBasis& basis,
                        const MultiField& phi0, const EnergyConfig& cfg,
                        const OptConfig& ocfg);

struct WeakMinimizeResult {
    double a = 0.0;
    MultiField phi;
    Trace trace;
    // Diagnostics at the returned iterate.
    double hit = 0.0;          // <nhat, r>
    double tangential = 0.0;   // ||P r||
    double residual_norm = 0.0;
    // <nhat, r> after every accepted iterate; the tail average is a
    // low-variance readout of the penalty equilibrium.
    std::vector<double> hit_history;
};

/// Mean of |hit - eps_star| over the trailing half (at most `window`
/// entries) of a hit history.
double tail_hit_residual(const std::vector<double>& hit_history, double eps_star,
                         int window = 50);

/// Joint descent on (a, phi) for the weakly coupled energy.
WeakMinimizeResult minimize_weak(const EnergyModel& model, double a0,
                                 const MultiField& phi0, const WeakConfig& wcfg,
                                 const OptConfig& ocfg);

WeakMinimizeResult minimize_weak(const ScalarField& S, const GeneratorBasis& basis,
                                 double a0, const MultiField& phi0,
                                 const EnergyConfig& cfg, const WeakConfig& wcfg,
                                 const OptConfig& ocfg);

enum class DegenerateCase { None, Stabilizer, ConstantField };

struct ConstantProbeResult {
    double min_grad_norm = 0.0;
    DegenerateCase flag = DegenerateCase::None;
};

/// Minimum of ||grad E(phi == c)|| over `samples` constants with |c| = v.
///
/// Strictly positive for generic signals; near zero only when the orbit
/// directions are degenerate (rank-deficient span, or e(x) e(x)^T constant
/// across the domain), which the flag reports.
ConstantProbeResult constant_probe(const ScalarField& S, const GeneratorBasis& basis,
                                   const EnergyConfig& cfg, int samples, Rng& rng);

struct SignTestResult {
    int choice = 0;    // -1, 0, +1
    double cost = 0.0;
};

/// Evaluate cost(S), cost(S + t*h), cost(S - t*h); pick the argmin.
/// Ties prefer no deformation, then +1.
SignTestResult sign_test(const ScalarField& S, const ScalarField& h, double t,
                         const std::function<double(const ScalarField&)>& cost);

/// Default control-field seed: uniform noise of amplitude 0.1*v, which moves
/// the iterate off the phi == 0 critical point.
MultiField seed_phi(const Grid& grid, int channels, double v, Rng& rng);

}  // namespace gaugeflow
