#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "gaugeflow/errors.hpp"
#include "gaugeflow/rng.hpp"

namespace gaugeflow {

/// Search-space dimension and effective threshold for a cap query.
struct CapQuery {
    int m = 2;
    double tau = 0.0;

    CapQuery(int m_, double tau_) : m(m_), tau(tau_) {
        if (m < 2) throw config_error("CapQuery: m must be >= 2");
        if (tau < 0.0) throw config_error("CapQuery: tau must be >= 0");
    }
};

/// Linearized-boundary geometry: distance, step budget, projected normal.
struct CrossingSetup {
    double dist = 0.0;
    double t_max = 1.0;
    double rho = 1.0;

    CrossingSetup(double dist_, double t_max_, double rho_)
        : dist(dist_), t_max(t_max_), rho(rho_) {
        if (dist < 0.0) throw config_error("CrossingSetup: dist must be >= 0");
        if (t_max <= 0.0) throw config_error("CrossingSetup: t_max must be > 0");
        if (rho < 0.0) throw config_error("CrossingSetup: rho must be >= 0");
    }
};

/// Regularized incomplete beta I_x(a,b) by modified-Lentz continued fraction
/// (tolerance 1e-12, symmetry switch at x > (a+1)/(a+b+2)).
double reg_inc_beta(double x, double a, double b);

/// Probability that a uniform unit direction u in dimension m satisfies
/// |<u, n>| >= tau: 1 for tau <= 0, 0 for tau > 1, else
/// I_{1-tau^2}((m-1)/2, 1/2).
double cap_probability(const CapQuery& q);

/// dist / (t_max * rho); +infinity when rho == 0 (the boundary is invisible
/// to the search space, so the cap probability is 0).
double effective_tau(const CrossingSetup& setup);

/// Gamma(m0/2) Gamma((m-1)/2) / (Gamma(m/2) Gamma((m0-1)/2)) via log-gamma;
/// the alignment threshold that equalizes first-order hit probabilities,
/// ~ sqrt(m0/m) for large m.
double cos_threshold(int m, int m0);

Eigen::VectorXd sample_sphere(int m, Rng& rng);

/// Orthonormal m x m0 frame whose column span is invariant-uniform.
Eigen::MatrixXd sample_subspace(int m, int m0, Rng& rng);

/// Squared projection length ||P n||^2 of a unit vector onto a uniform
/// m0-dimensional subspace, sampled exactly in law as a ratio of chi-squares.
double sample_projection_sq(int m, int m0, Rng& rng);

struct McEstimate {
    double p_hat = 0.0;
    double sigma = 0.0;   // binomial standard error
};

/// Empirical cap probability: N uniform directions against the threshold of
/// `setup`.
McEstimate mc_cap(const Eigen::VectorXd& n, const CrossingSetup& setup, int m,
                  int N, Rng& rng);

struct SliceReport {
    double p_slice = 0.0;       // restricted search, threshold tau_U / cos_theta
    double p_rand_mean = 0.0;   // random m0-dim reduction, averaged over draws
    bool dominates = false;     // p_slice >= p_rand_mean
    bool degenerate = false;    // cos_theta == 0
};

/// Hit probability of the aligned m0-dimensional slice vs the expectation
/// over uniformly random m0-dimensional reductions, in the small-threshold
/// regime tau_U <= 0.1.
SliceReport slice_vs_random(int m, int m0, double cos_theta, double tau_U,
                            int trials, Rng& rng);

/// Two-sided Kolmogorov-Smirnov distance of samples against a CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Asymptotic KS critical value at significance alpha for N samples.
double ks_critical(double alpha, int N);

/// Raw and central moments of Beta(a,b), for MC standard-error oracles.
struct BetaMoments {
    double mean = 0.0;
    double variance = 0.0;
    double central4 = 0.0;
};
BetaMoments beta_moments(double a, double b);

}  // namespace gaugeflow
