#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaugeflow/energy.hpp"
#include "gaugeflow/optimize.hpp"

namespace gaugeflow {

enum class TaskKind { TemplateCorr, NormBand, SmoothQuadratic };

std::string to_string(TaskKind k);
TaskKind task_kind_from_string(const std::string& name);

/// Piecewise-constant cost W = w0 if F(S) <= 0 else w1, induced by a
/// translation-invariant Lipschitz proxy F.
///
///   TemplateCorr:    F = theta - max_k <shift_k(template), S>    (Clarke branch)
///   NormBand:        F = theta - ||S||^2                         (L estimated)
///   SmoothQuadratic: F = theta - ||S||^2, grad F = -2S, exact L = 2
struct SyntheticTask {
    TaskKind kind = TaskKind::SmoothQuadratic;
    double theta = 1.0;
    ScalarField tmpl;       // TemplateCorr only
    double lipschitz = 2.0;
    double w0 = 0.0;
    double w1 = 1.0;

    void validate() const {
        if (!(w0 < w1)) throw config_error("SyntheticTask: need w0 < w1");
        if (kind == TaskKind::TemplateCorr && tmpl.v.empty())
            throw config_error("SyntheticTask: TemplateCorr needs a template");
    }
};

SyntheticTask make_task(TaskKind kind, double theta, double w0, double w1);
SyntheticTask make_template_task(ScalarField tmpl, double theta, double w0, double w1);

double eval_F(const SyntheticTask& task, const ScalarField& S);
double eval_W(const SyntheticTask& task, const ScalarField& S);

struct ClarkeResult {
    ScalarField g;
    bool tie = false;         // TemplateCorr: argmax shift was not unique
    int shift_kx = 0;
    int shift_ky = 0;
};

/// An element of the Clarke subdifferential of F at S. For TemplateCorr the
/// argmax shift is used, ties broken by smallest row-major index (and
/// flagged); the quadratic tasks return the exact gradient -2S.
ClarkeResult clarke_subgradient(const SyntheticTask& task, const ScalarField& S);

/// Symmetry-aware task normal and the induced step targets.
struct SubgradientResult {
    ScalarField g;            // the subgradient used
    ScalarField g_normal;     // (I - P) g
    ScalarField nhat;         // -g_normal / ||g_normal|| (valid if feasible)
    double delta = 0.0;       // F(S), the boundary gap
    double d_n = 0.0;         // first-order step Delta / ||g_N||
    std::optional<double> eps_minus;  // curvature-safe step if ||g_N||^2 >= 2 L Delta
    bool normal_feasible = false;     // ||g_N|| > 1e-10 * ||g||
};

SubgradientResult task_normal(const ScalarField& g, const OrbitBasis& basis,
                              const GramData& gram, double delta, double lipschitz);

struct RungRecord {
    double t = 0.0;
    int choice = 0;
    double cost = 0.0;
};

struct PureDescentOutcome {
    bool crossed = false;
    double t = 0.0;           // chosen step (0 when no deformation wins)
    int sign = 0;
    double w_before = 0.0;
    double w_after = 0.0;
    double delta_w = 0.0;     // w_before - w_after
    double leakage = 0.0;     // ||P h|| / ||h|| of the proposed direction
    std::vector<RungRecord> rungs;
};

/// Purely geometric pipeline: minimize the variant-(b) energy, normalize the
/// residual direction, then sign-test it over the step ladder
/// {t_max, t_max/2, ..., t_max/16}.
PureDescentOutcome pure_descent(const ScalarField& S, const SyntheticTask& task,
                                const GeneratorBasis& basis, const EnergyConfig& cfg,
                                const OptConfig& ocfg, double t_max);

struct WeakDescentOutcome {
    bool crossed = false;     // F_after <= 0
    double f_before = 0.0;
    double f_after = 0.0;
    double eps_star = 0.0;
    bool used_curvature_safe = false;
    double hit_residual = 0.0;        // |<nhat, r> - eps_star|
    double tangential = 0.0;          // ||P r||
    double residual_norm = 0.0;       // ||r||
    double reachability = 0.0;        // <nhat, sum_i phi0_i e_i> at the seed
    bool descent_lemma_ok = true;     // F(S+r) <= F(S) + <g,r> + L/2 ||r||^2 + 1e-8
    std::string reason;               // set when crossed == false
};

/// Weakly coupled pipeline: one subgradient per sample, curvature-safe step
/// target when feasible (first-order target otherwise), then joint descent
/// on (a, phi).
WeakDescentOutcome weak_descent(const ScalarField& S, const SyntheticTask& task,
                                const GeneratorBasis& basis, const EnergyConfig& cfg,
                                const WeakConfig& wcfg, const OptConfig& ocfg);

struct AuditResult {
    double max_deviation = 0.0;   // max |F(shift S) - F(S)|
    int w_changes = 0;            // # sampled shifts where W differed
};

/// Invariance audit over random integer shifts.
AuditResult invariance_audit(const SyntheticTask& task, const ScalarField& S,
                             int k_samples, Rng& rng);

/// Same audit for an arbitrary functional, used to validate the auditor
/// against deliberately non-invariant probes.
AuditResult invariance_audit_fn(const std::function<double(const ScalarField&)>& F,
                                const ScalarField& S, int k_samples, Rng& rng);

}  // namespace gaugeflow
