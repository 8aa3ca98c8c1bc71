#include "gaugeflow/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gaugeflow {

namespace {

constexpr double kAdamEps = 1e-12;
constexpr int kMaxHalvings = 20;

// Flat view over (a, phi) so one Adam loop serves both minimizers. The scalar
// slot is unused in the plain minimize path.
struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    int t = 0;

    explicit AdamState(std::size_t n) : m(n, 0.0), v(n, 0.0) {}

    // Writes the scaled direction into d.
    void direction(const std::vector<double>& g, double beta1, double beta2,
                   std::vector<double>& d) {
        ++t;
        const double c1 = 1.0 - std::pow(beta1, t);
        const double c2 = 1.0 - std::pow(beta2, t);
        for (std::size_t i = 0; i < g.size(); ++i) {
            m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
            v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
            d[i] = (m[i] / c1) / (std::sqrt(v[i] / c2) + kAdamEps);
        }
    }
};

double norm2(const std::vector<double>& g) {
    double s = 0.0;
    for (double x : g) s += x * x;
    return std::sqrt(s);
}

// Generic driver: x is the flat parameter vector.
template <typename Value, typename Gradient>
Trace adam_backtracking(std::vector<double>& x, const OptConfig& ocfg, Value value,
                        Gradient gradient, std::vector<double>& best_x) {
    ocfg.validate();
    Trace trace;
    double fx = value(x);
    if (!std::isfinite(fx)) throw numeric_error("minimize: non-finite initial energy");
    double best_f = fx;
    best_x = x;
    trace.energies.push_back(fx);

    AdamState adam(x.size());
    std::vector<double> g(x.size()), d(x.size()), trial(x.size());
    double g0 = -1.0;

    for (int iter = 0; iter < ocfg.max_iters; ++iter) {
        gradient(x, g);
        const double gn = norm2(g);
        trace.grad_norms.push_back(gn);
        trace.final_grad_norm = gn;
        if (g0 < 0.0) g0 = gn;
        if (gn <= ocfg.grad_tol * g0) {
            trace.converged = true;
            trace.iterations = iter;
            return trace;
        }

        adam.direction(g, ocfg.beta1, ocfg.beta2, d);

        double step = ocfg.step;
        double f_trial = 0.0;
        bool accepted = false;
        for (int halving = 0; halving <= kMaxHalvings; ++halving) {
            for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] - step * d[i];
            f_trial = value(trial);
            if (!std::isfinite(f_trial))
                throw numeric_error("minimize: non-finite energy during line search");
            if (f_trial <= fx) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        trace.iterations = iter + 1;
        if (!accepted) {
            // 20 halvings failed to improve; the iterate is as converged as
            // this direction allows.
            trace.energies.push_back(fx);
            continue;
        }
        x = trial;
        fx = f_trial;
        trace.energies.push_back(fx);
        if (fx < best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    return trace;
}

std::vector<double> flatten(const MultiField& phi, int extra = 0) {
    std::vector<double> x;
    x.reserve(static_cast<std::size_t>(extra) +
              phi.channel.size() * phi.channel[0].v.size());
    for (const auto& ch : phi.channel) x.insert(x.end(), ch.v.begin(), ch.v.end());
    return x;
}

void unflatten(const std::vector<double>& x, MultiField& phi, int offset = 0) {
    std::size_t p = static_cast<std::size_t>(offset);
    for (auto& ch : phi.channel) {
        std::copy(x.begin() + p, x.begin() + p + ch.v.size(), ch.v.begin());
        p += ch.v.size();
    }
}

}  // namespace

MinimizeResult minimize(const EnergyModel& model, const MultiField& phi0,
                        const OptConfig& ocfg) {
    MultiField shape = phi0;
    std::vector<double> x = flatten(phi0);
    std::vector<double> best_x;

    auto value = [&](const std::vector<double>& p) {
        unflatten(p, shape);
        return model.value(shape);
    };
    auto gradient = [&](const std::vector<double>& p, std::vector<double>& g) {
        unflatten(p, shape);
        const MultiField mg = model.gradient(shape);
        std::size_t k = 0;
        for (const auto& ch : mg.channel)
            for (double gi : ch.v) g[k++] = gi;
    };

    MinimizeResult out;
    out.trace = adam_backtracking(x, ocfg, value, gradient, best_x);
    out.phi = phi0;
    unflatten(best_x, out.phi);
    return out;
}

MinimizeResult minimize(const ScalarField& S, const GeneratorBasis& basis,
                        const MultiField& phi0, const EnergyConfig& cfg,
                        const OptConfig& ocfg) {
    return minimize(EnergyModel(S, basis, cfg), phi0, ocfg);
}

WeakMinimizeResult minimize_weak(const EnergyModel& model, double a0,
                                 const MultiField& phi0, const WeakConfig& wcfg,
                                 const OptConfig& ocfg) {
    wcfg.validate();
    MultiField shape = phi0;
    std::vector<double> x;
    x.push_back(a0);
    const std::vector<double> phi_flat = flatten(phi0);
    x.insert(x.end(), phi_flat.begin(), phi_flat.end());
    std::vector<double> best_x;

    WeakMinimizeResult out;

    auto hit_of = [&](double a, const MultiField& phi) {
        const VectorField A = assemble(model.basis(), phi);
        const ScalarField r =
            warp(model.signal(), A, FlowConfig(a, model.config().substeps)) -
            model.signal();
        return inner_product(wcfg.nhat, r);
    };

    auto value = [&](const std::vector<double>& p) {
        unflatten(p, shape, 1);
        return model.weak_value(p[0], shape, wcfg);
    };
    auto gradient = [&](const std::vector<double>& p, std::vector<double>& g) {
        unflatten(p, shape, 1);
        out.hit_history.push_back(hit_of(p[0], shape));
        const WeakGradient wg = model.weak_gradient(p[0], shape, wcfg);
        g[0] = wg.d_a;
        std::size_t k = 1;
        for (const auto& ch : wg.d_phi.channel)
            for (double gi : ch.v) g[k++] = gi;
    };

    out.trace = adam_backtracking(x, ocfg, value, gradient, best_x);
    out.a = best_x[0];
    out.phi = phi0;
    unflatten(best_x, out.phi, 1);

    const VectorField A = assemble(model.basis(), out.phi);
    const ScalarField r =
        warp(model.signal(), A, FlowConfig(out.a, model.config().substeps)) -
        model.signal();
    out.hit = inner_product(wcfg.nhat, r);
    out.tangential = norm(project(r, model.orbit(), model.gram_data()).tangent);
    out.residual_norm = norm(r);
    return out;
}

double tail_hit_residual(const std::vector<double>& hit_history, double eps_star,
                         int window) {
    if (hit_history.empty()) return 0.0;
    const std::size_t n = hit_history.size();
    const std::size_t take =
        std::max<std::size_t>(1, std::min<std::size_t>(window, n / 2));
    double acc = 0.0;
    for (std::size_t i = n - take; i < n; ++i)
        acc += std::abs(hit_history[i] - eps_star);
    return acc / static_cast<double>(take);
}

WeakMinimizeResult minimize_weak(const ScalarField& S, const GeneratorBasis& basis,
                                 double a0, const MultiField& phi0,
                                 const EnergyConfig& cfg, const WeakConfig& wcfg,
                                 const OptConfig& ocfg) {
    return minimize_weak(EnergyModel(S, basis, cfg), a0, phi0, wcfg, ocfg);
}

ConstantProbeResult constant_probe(const ScalarField& S, const GeneratorBasis& basis,
                                   const EnergyConfig& cfg, int samples, Rng& rng) {
    if (samples < 1) throw config_error("constant_probe: samples must be >= 1");
    const EnergyModel model(S, basis, cfg);
    const int d = basis.size();
    const Grid& grid = S.grid;

    ConstantProbeResult out;
    out.min_grad_norm = std::numeric_limits<double>::infinity();
    MultiField phi(grid, d);
    for (int s = 0; s < samples; ++s) {
        // Uniform direction on the sphere of radius v in R^d.
        std::vector<double> c(d);
        double n2 = 0.0;
        do {
            n2 = 0.0;
            for (double& ci : c) {
                ci = rng.gaussian();
                n2 += ci * ci;
            }
        } while (n2 == 0.0);
        const double scale = cfg.v / std::sqrt(n2);
        for (int i = 0; i < d; ++i)
            std::fill(phi.channel[i].v.begin(), phi.channel[i].v.end(), scale * c[i]);
        out.min_grad_norm = std::min(out.min_grad_norm, norm(model.gradient(phi)));
    }

    // Diagnose which genericity hypothesis fails, if any. A rank drop of the
    // Gram matrix means some combination of generators stabilizes S. The
    // remaining exception is e(x) e(x)^T constant across the domain: constant
    // |e| and (up to sign) constant direction.
    const GramData& gd = model.gram_data();
    if (gd.rank < d) {
        out.flag = DegenerateCase::Stabilizer;
        return out;
    }

    const OrbitBasis& ob = model.orbit();
    const int n = grid.size();
    double mag_min = std::numeric_limits<double>::infinity();
    double mag_max = 0.0;
    for (int k = 0; k < n; ++k) {
        double m2 = 0.0;
        for (int i = 0; i < d; ++i) m2 += ob.e[i].v[k] * ob.e[i].v[k];
        mag_min = std::min(mag_min, m2);
        mag_max = std::max(mag_max, m2);
    }
    const bool magnitude_constant = mag_max > 0.0 && (mag_max - mag_min) <= 1e-8 * mag_max;
    // With full Gram rank, a constant direction is only possible for d = 1;
    // for d >= 2 it would collapse the rank to 1.
    const bool direction_constant = d == 1 || gd.rank <= 1;
    if (magnitude_constant && direction_constant)
        out.flag = DegenerateCase::ConstantField;
    return out;
}

SignTestResult sign_test(const ScalarField& S, const ScalarField& h, double t,
                         const std::function<double(const ScalarField&)>& cost) {
    if (t <= 0.0) throw config_error("sign_test: t must be > 0");
    require_same_grid(S.grid, h.grid, "sign_test");

    const double c0 = cost(S);
    ScalarField probe = S;
    axpy(t, h, probe);
    const double cp = cost(probe);
    probe = S;
    axpy(-t, h, probe);
    const double cm = cost(probe);

    SignTestResult out{0, c0};
    if (cp < out.cost) out = {+1, cp};
    if (cm < out.cost) out = {-1, cm};
    return out;
}

MultiField seed_phi(const Grid& grid, int channels, double v, Rng& rng) {
    return random_noise_multifield(grid, channels, 0.1 * v, rng);
}

}  // namespace gaugeflow
