#include "gaugeflow/tasks.hpp"

#include <algorithm>
#include <cmath>

namespace gaugeflow {

std::string to_string(TaskKind k) {
    switch (k) {
        case TaskKind::TemplateCorr: return "template_corr";
        case TaskKind::NormBand: return "norm_band";
        case TaskKind::SmoothQuadratic: return "smooth_quadratic";
    }
    return "?";
}

TaskKind task_kind_from_string(const std::string& name) {
    if (name == "template_corr") return TaskKind::TemplateCorr;
    if (name == "norm_band") return TaskKind::NormBand;
    if (name == "smooth_quadratic") return TaskKind::SmoothQuadratic;
    throw config_error("unknown task kind: " + name);
}

SyntheticTask make_task(TaskKind kind, double theta, double w0, double w1) {
    if (kind == TaskKind::TemplateCorr)
        throw config_error("make_task: TemplateCorr needs a template field");
    SyntheticTask t;
    t.kind = kind;
    t.theta = theta;
    t.w0 = w0;
    t.w1 = w1;
    t.lipschitz = 2.0;   // exact for the quadratic proxy, upper bound for NormBand
    t.validate();
    return t;
}

SyntheticTask make_template_task(ScalarField tmpl, double theta, double w0,
                                 double w1) {
    SyntheticTask t;
    t.kind = TaskKind::TemplateCorr;
    t.theta = theta;
    t.tmpl = std::move(tmpl);
    t.w0 = w0;
    t.w1 = w1;
    // Correlation against a fixed template is 1-Lipschitz per shift; the max
    // keeps that bound.
    t.lipschitz = norm(t.tmpl);
    t.validate();
    return t;
}

namespace {

// Max over all cyclic shifts of <shift(template), S>, with argmax.
struct CorrScan {
    double best = 0.0;
    int kx = 0, ky = 0;
    bool tie = false;
};

CorrScan scan_correlations(const ScalarField& tmpl, const ScalarField& S) {
    require_same_grid(tmpl.grid, S.grid, "eval_F");
    const Grid& g = S.grid;
    CorrScan out;
    bool first = true;
    for (int ky = 0; ky < g.ny; ++ky) {
        for (int kx = 0; kx < g.nx; ++kx) {
            double corr = 0.0;
            // <shift_{kx,ky}(tmpl), S> = sum tmpl(ix-kx, iy-ky) S(ix,iy) mu
            for (int iy = 0; iy < g.ny; ++iy)
                for (int ix = 0; ix < g.nx; ++ix)
                    corr += tmpl.at_wrap(ix - kx, iy - ky) * S.v[g.index(ix, iy)];
            corr *= g.cell_measure();
            if (first || corr > out.best + 1e-15 * std::abs(out.best)) {
                out.best = corr;
                out.kx = kx;
                out.ky = ky;
                out.tie = false;
                first = false;
            } else if (std::abs(corr - out.best) <= 1e-12 * std::max(1.0, std::abs(out.best))) {
                out.tie = true;
            }
        }
    }
    return out;
}

}  // namespace

double eval_F(const SyntheticTask& task, const ScalarField& S) {
    task.validate();
    switch (task.kind) {
        case TaskKind::TemplateCorr:
            return task.theta - scan_correlations(task.tmpl, S).best;
        case TaskKind::NormBand:
        case TaskKind::SmoothQuadratic:
            return task.theta - inner_product(S, S);
    }
    return 0.0;
}

double eval_W(const SyntheticTask& task, const ScalarField& S) {
    return eval_F(task, S) <= 0.0 ? task.w0 : task.w1;
}

ClarkeResult clarke_subgradient(const SyntheticTask& task, const ScalarField& S) {
    task.validate();
    ClarkeResult out;
    if (task.kind == TaskKind::TemplateCorr) {
        const CorrScan scan = scan_correlations(task.tmpl, S);
        out.g = -1.0 * shift(task.tmpl, scan.kx, scan.ky);
        out.tie = scan.tie;
        out.shift_kx = scan.kx;
        out.shift_ky = scan.ky;
    } else {
        out.g = -2.0 * S;
    }
    return out;
}

SubgradientResult task_normal(const ScalarField& g, const OrbitBasis& basis,
                              const GramData& gram, double delta, double lipschitz) {
    require_finite(g, "task_normal");
    SubgradientResult out;
    out.g = g;
    out.delta = delta;

    const Projection split = project(g, basis, gram);
    out.g_normal = split.normal;
    const double gn = norm(out.g_normal);
    out.normal_feasible = gn > 1e-10 * norm(g);
    if (!out.normal_feasible) {
        out.nhat = ScalarField(g.grid);
        return out;
    }

    out.nhat = (-1.0 / gn) * out.g_normal;
    out.d_n = delta / gn;
    const double disc = gn * gn - 2.0 * lipschitz * delta;
    if (disc >= 0.0 && lipschitz > 0.0)
        out.eps_minus = (gn - std::sqrt(disc)) / lipschitz;
    return out;
}

PureDescentOutcome pure_descent(const ScalarField& S, const SyntheticTask& task,
                                const GeneratorBasis& basis, const EnergyConfig& cfg,
                                const OptConfig& ocfg, double t_max) {
    if (t_max <= 0.0) throw config_error("pure_descent: t_max must be > 0");
    if (cfg.variant != DataVariant::B)
        throw config_error("pure_descent: energy variant must be b");

    const EnergyModel model(S, basis, cfg);
    Rng rng(ocfg.seed, /*stream=*/0x70757265);
    const MultiField phi0 = seed_phi(S.grid, basis.size(), cfg.v, rng);
    const MinimizeResult min = minimize(model, phi0, ocfg);

    PureDescentOutcome out;
    out.w_before = eval_W(task, S);

    ScalarField h = model.residual(min.phi);
    const double hn = norm(h);
    if (hn == 0.0) {
        out.w_after = out.w_before;
        return out;
    }
    h = (1.0 / hn) * h;
    out.leakage = norm(project(h, model.orbit(), model.gram_data()).tangent);

    const auto cost = [&](const ScalarField& probe) { return eval_W(task, probe); };
    double best_cost = out.w_before;
    for (int rung = 0; rung < 5; ++rung) {
        const double t = t_max / (1 << rung);
        const SignTestResult res = sign_test(S, h, t, cost);
        out.rungs.push_back({t, res.choice, res.cost});
        if (res.choice != 0 && res.cost < best_cost) {
            best_cost = res.cost;
            out.t = t;
            out.sign = res.choice;
        }
    }
    out.w_after = best_cost;
    out.delta_w = out.w_before - out.w_after;
    out.crossed = out.delta_w > 0.0;
    return out;
}

WeakDescentOutcome weak_descent(const ScalarField& S, const SyntheticTask& task,
                                const GeneratorBasis& basis, const EnergyConfig& cfg,
                                const WeakConfig& wcfg, const OptConfig& ocfg) {
    if (cfg.variant != DataVariant::B)
        throw config_error("weak_descent: energy variant must be b");

    WeakDescentOutcome out;
    out.f_before = eval_F(task, S);

    const EnergyModel model(S, basis, cfg);
    const ClarkeResult clarke = clarke_subgradient(task, S);
    const SubgradientResult sg = task_normal(clarke.g, model.orbit(),
                                             model.gram_data(), out.f_before,
                                             task.lipschitz);
    if (!sg.normal_feasible) {
        out.f_after = out.f_before;
        out.reason = "subgradient lies in the orbit tangent space";
        return out;
    }

    out.used_curvature_safe = sg.eps_minus.has_value();
    out.eps_star = sg.eps_minus.value_or(sg.d_n);

    WeakConfig wc = wcfg;
    wc.nhat = sg.nhat;
    wc.eps_star = out.eps_star;

    Rng rng(ocfg.seed, /*stream=*/0x7765616b);
    const MultiField phi0 = seed_phi(S.grid, basis.size(), cfg.v, rng);
    out.reachability = inner_product(wc.nhat, linearized_residual(S, basis, phi0));

    const WeakMinimizeResult res = minimize_weak(model, wc.a0, phi0, wc, ocfg);

    const VectorField A = assemble(basis, res.phi);
    const ScalarField warped = warp(S, A, FlowConfig(res.a, cfg.substeps));
    const ScalarField r = warped - S;

    out.f_after = eval_F(task, warped);
    out.crossed = out.f_after <= 0.0;
    out.hit_residual = std::abs(res.hit - out.eps_star);
    out.tangential = res.tangential;
    out.residual_norm = res.residual_norm;

    const double lemma_rhs = out.f_before + inner_product(clarke.g, r) +
                             0.5 * task.lipschitz * res.residual_norm *
                                 res.residual_norm;
    out.descent_lemma_ok = out.f_after <= lemma_rhs + 1e-8;
    if (!out.crossed && out.reason.empty()) out.reason = "did not reach the boundary";
    return out;
}

AuditResult invariance_audit_fn(const std::function<double(const ScalarField&)>& F,
                                const ScalarField& S, int k_samples, Rng& rng) {
    if (k_samples < 1) throw config_error("invariance_audit: k_samples must be >= 1");
    AuditResult out;
    const double f0 = F(S);
    for (int k = 0; k < k_samples; ++k) {
        const int kx = static_cast<int>(rng.below(static_cast<std::uint64_t>(S.grid.nx)));
        const int ky = static_cast<int>(rng.below(static_cast<std::uint64_t>(S.grid.ny)));
        const double fk = F(shift(S, kx, ky));
        out.max_deviation = std::max(out.max_deviation, std::abs(fk - f0));
        if ((fk <= 0.0) != (f0 <= 0.0)) ++out.w_changes;
    }
    return out;
}

AuditResult invariance_audit(const SyntheticTask& task, const ScalarField& S,
                             int k_samples, Rng& rng) {
    AuditResult out = invariance_audit_fn(
        [&](const ScalarField& probe) { return eval_F(task, probe); }, S, k_samples,
        rng);
    return out;
}

}  // namespace gaugeflow
