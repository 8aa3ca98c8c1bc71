#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaugeflow/report.hpp"
#include "gaugeflow/tasks.hpp"

namespace gaugeflow {

/// Cap-probability table: formula vs Monte Carlo per (m, tau).
/// Header: m,m0,tau,formula_p,mc_p,sigma (m0 == m for the unrestricted search).
CsvTable cap_table(const std::vector<int>& ms, const std::vector<double>& taus,
                   int mc_n, std::uint64_t seed);

struct GrassmannRow {
    int m = 0;
    int m0 = 0;
    double mean = 0.0;
    double mean_expected = 0.0;
    double mean_sigma = 0.0;
    double variance = 0.0;
    double variance_expected = 0.0;
    double variance_sigma = 0.0;
    double ks = 0.0;
    double ks_critical = 0.0;
    double p_slice_edge = 0.0;   // cos(theta) = sqrt(m0/m)
    double p_rand_mean = 0.0;
    double p_slice_full = 0.0;   // cos(theta) = 1
    bool pass = false;
};

/// Projection-law statistics for one (m, m0) pair: N full-frame draws for the
/// moments and KS test, plus the slice-vs-random comparison at tau_U = 1e-3.
GrassmannRow grassmann_row(int m, int m0, int frames, std::uint64_t seed);

struct EnergyMinReport {
    double energy_initial = 0.0;
    double energy_final = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
    bool converged = false;
    double constraint_max = 0.0;
    double constraint_scale = 0.0;   // max_i ||e_i|| * ||r||
    double leakage = 0.0;            // ||P r|| / ||r||
    Trace trace;
};

/// Seeded synthetic signal, minimize, and the minimizer identities.
EnergyMinReport energy_min_experiment(const Grid& grid, const GeneratorBasis& basis,
                                      const EnergyConfig& cfg, const OptConfig& ocfg);

struct Lemma1Report {
    double probe = 0.0;
    double floor = 0.0;   // 1e-4 * beta * v^3
    DegenerateCase flag = DegenerateCase::None;
    bool generic_ok = false;
    DegenerateCase stabilizer_flag = DegenerateCase::None;
    DegenerateCase constant_flag = DegenerateCase::None;
};

/// The constant-field probe on a generic signal plus both degenerate
/// constructions (stabilized signal; exactly constant orbit direction).
Lemma1Report lemma1_experiment(const EnergyConfig& cfg, int samples,
                               std::uint64_t seed);

/// One record per seed for the descent pipelines.
struct DescentRecord {
    std::uint64_t seed = 0;
    bool crossed = false;
    double f_before = 0.0;
    double f_after = 0.0;
    double delta_w = 0.0;
    double t = 0.0;
    int sign = 0;
    double leakage = 0.0;
    double hit_residual = 0.0;
    double tangential = 0.0;
    bool descent_lemma_ok = true;
    nlohmann::json to_json(const std::string& task_name) const;
};

/// Weak-descent certification instance: offset smooth signal, quadratic task
/// with a feasibility margin.
struct CertInstance {
    ScalarField S;
    SyntheticTask task;
};
CertInstance make_certification_instance(const Grid& grid,
                                         const GeneratorBasis& basis,
                                         const EnergyConfig& cfg,
                                         std::uint64_t seed);

std::vector<DescentRecord> weak_descent_batch(const Grid& grid,
                                              const GeneratorBasis& basis,
                                              const EnergyConfig& cfg,
                                              const WeakConfig& wcfg,
                                              const OptConfig& ocfg, int seeds);

/// Tail-averaged |<nhat, r> - eps_star| per lambda, geometric mean over
/// seeds, plus the fitted log-log slope.
struct SweepReport {
    std::vector<double> lambdas;
    std::vector<double> residuals;
    double slope = 0.0;
};
SweepReport lambda_sweep(const Grid& grid, const GeneratorBasis& basis,
                         const EnergyConfig& cfg, double eta, double eps_star,
                         const std::vector<double>& lambdas, int seeds_per_lambda,
                         int max_iters, std::uint64_t seed);

std::vector<DescentRecord> pure_descent_batch(const Grid& grid,
                                              const GeneratorBasis& basis,
                                              const EnergyConfig& cfg,
                                              const OptConfig& ocfg, double t_max,
                                              int seeds);

/// Sign-test crossing rate for directions sampled uniformly from an
/// m0-dimensional slice of the normal space, against a linear two-valued
/// cost at a known distance: the literal finite-dimensional crossing model.
struct CapRateReport {
    int m0 = 0;
    double tau = 0.0;
    double rate = 0.0;
    double formula = 0.0;
    double sigma = 0.0;   // binomial
    bool pass = false;    // |rate - formula| <= 4 sigma
};
CapRateReport sign_test_cap_experiment(const Grid& grid,
                                       const GeneratorBasis& basis, int m0,
                                       double dist, double t_max, int seeds,
                                       std::uint64_t seed);

struct AuditReport {
    std::string task;
    double max_deviation = 0.0;
    int w_changes = 0;
    bool pass = false;
};
std::vector<AuditReport> audit_experiment(const Grid& grid, int k_samples,
                                          std::uint64_t seed);

}  // namespace gaugeflow
