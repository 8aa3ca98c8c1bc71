#include "gaugeflow/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace gaugeflow {

namespace {

constexpr double kCfTol = 1e-12;
constexpr int kCfMaxIter = 500;

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
    const double tiny = 1e-300;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kCfMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kCfTol) return h;
    }
    throw numeric_error("reg_inc_beta: continued fraction did not converge");
}

}  // namespace

double reg_inc_beta(double x, double a, double b) {
    if (!(x >= 0.0 && x <= 1.0)) throw numeric_error("reg_inc_beta: x outside [0,1]");
    if (!(a > 0.0) || !(b > 0.0)) throw numeric_error("reg_inc_beta: a, b must be > 0");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                             a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double cap_probability(const CapQuery& q) {
    if (q.tau <= 0.0) return 1.0;
    if (q.tau > 1.0) return 0.0;
    return reg_inc_beta(1.0 - q.tau * q.tau, 0.5 * (q.m - 1), 0.5);
}

double effective_tau(const CrossingSetup& setup) {
    // rho == 0 means the boundary normal is invisible to the search space.
    if (setup.rho == 0.0) return std::numeric_limits<double>::infinity();
    return setup.dist / (setup.t_max * setup.rho);
}

double cos_threshold(int m, int m0) {
    if (m0 < 2 || m0 > m) throw config_error("cos_threshold: need 2 <= m0 <= m");
    if (m0 == m) return 1.0;
    return std::exp(std::lgamma(0.5 * m0) + std::lgamma(0.5 * (m - 1)) -
                    std::lgamma(0.5 * m) - std::lgamma(0.5 * (m0 - 1)));
}

Eigen::VectorXd sample_sphere(int m, Rng& rng) {
    if (m < 1) throw config_error("sample_sphere: m must be >= 1");
    Eigen::VectorXd v(m);
    double n2 = 0.0;
    do {
        for (int i = 0; i < m; ++i) v(i) = rng.gaussian();
        n2 = v.squaredNorm();
    } while (n2 == 0.0);
    return v / std::sqrt(n2);
}

Eigen::MatrixXd sample_subspace(int m, int m0, Rng& rng) {
    if (m0 < 1 || m0 > m) throw config_error("sample_subspace: need 1 <= m0 <= m");
    Eigen::MatrixXd A(m, m0);
    for (int j = 0; j < m0; ++j)
        for (int i = 0; i < m; ++i) A(i, j) = rng.gaussian();
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
    return qr.householderQ() * Eigen::MatrixXd::Identity(m, m0);
}

double sample_projection_sq(int m, int m0, Rng& rng) {
    if (m0 < 1 || m0 > m) throw config_error("sample_projection_sq: need 1 <= m0 <= m");
    if (m0 == m) return 1.0;
    double head = 0.0, total = 0.0;
    for (int i = 0; i < m; ++i) {
        const double g = rng.gaussian();
        total += g * g;
        if (i < m0) head += g * g;
    }
    if (total == 0.0) return sample_projection_sq(m, m0, rng);
    return head / total;
}

McEstimate mc_cap(const Eigen::VectorXd& n, const CrossingSetup& setup, int m,
                  int N, Rng& rng) {
    if (N < 1000) throw config_error("mc_cap: N must be >= 1000");
    if (n.size() != m) throw config_error("mc_cap: normal dimension != m");
    if (std::abs(n.norm() - 1.0) > 1e-12)
        throw config_error("mc_cap: normal must have unit norm");
    const double tau = effective_tau(setup);
    int hits = 0;
    for (int trial = 0; trial < N; ++trial) {
        Rng local = rng.substream(static_cast<std::uint64_t>(trial));
        const Eigen::VectorXd u = sample_sphere(m, local);
        if (std::abs(u.dot(n)) >= tau) ++hits;
    }
    McEstimate out;
    out.p_hat = static_cast<double>(hits) / N;
    out.sigma = std::sqrt(out.p_hat * (1.0 - out.p_hat) / N);
    return out;
}

SliceReport slice_vs_random(int m, int m0, double cos_theta, double tau_U,
                            int trials, Rng& rng) {
    if (m0 < 2 || m0 > m) throw config_error("slice_vs_random: need 2 <= m0 <= m");
    if (tau_U > 0.1) throw config_error("slice_vs_random: tau_U must be <= 0.1");
    if (trials < 1) throw config_error("slice_vs_random: trials must be >= 1");

    SliceReport out;
    if (cos_theta == 0.0) {
        out.degenerate = true;
        out.p_slice = 0.0;
    } else {
        out.p_slice = cap_probability(CapQuery(m0, tau_U / cos_theta));
    }

    // E over random m0-dim reductions, sampling only the projection length;
    // its law is all the cap probability depends on.
    double acc = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        Rng local = rng.substream(static_cast<std::uint64_t>(trial));
        const double B = sample_projection_sq(m, m0, local);
        const double tau = B > 0.0 ? tau_U / std::sqrt(B)
                                   : std::numeric_limits<double>::infinity();
        acc += tau <= 1.0 ? cap_probability(CapQuery(m0, tau)) : 0.0;
    }
    out.p_rand_mean = acc / trials;
    out.dominates = out.p_slice >= out.p_rand_mean;
    return out;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
    if (samples.empty()) throw config_error("ks_statistic: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

double ks_critical(double alpha, int N) {
    // Asymptotic inverse of the Kolmogorov distribution tail.
    return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(N));
}

BetaMoments beta_moments(double a, double b) {
    // Raw moments E[B^k] = prod_{i<k} (a+i)/(a+b+i).
    double raw[5] = {1.0, 0.0, 0.0, 0.0, 0.0};
    for (int k = 1; k <= 4; ++k)
        raw[k] = raw[k - 1] * (a + k - 1) / (a + b + k - 1);
    BetaMoments out;
    out.mean = raw[1];
    out.variance = raw[2] - raw[1] * raw[1];
    out.central4 = raw[4] - 4.0 * raw[1] * raw[3] + 6.0 * raw[1] * raw[1] * raw[2] -
                   3.0 * raw[1] * raw[1] * raw[1] * raw[1];
    return out;
}

}  // namespace gaugeflow
