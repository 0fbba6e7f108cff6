#pragma once

#include <string>
#include <vector>

#include "declab/damping.hpp"
#include "declab/fit.hpp"
#include "declab/sigma_min.hpp"

namespace declab {

struct SweepSample {
    double parameter = 0.0;
    double sigma = 0.0;
    int iterations = 0;
    bool resolved = false; // < 1% change under doubled resolution (and box)
};

struct SweepResult {
    std::string parameter_name;
    std::vector<SweepSample> samples;
    double fitted_exponent = 0.0;
    double fit_residual = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
};

// Log-spaced grid helper (inclusive endpoints).
std::vector<double> log_spaced(double lo, double hi, int count);

// Log-spaced then rounded to distinct integers. Torus P_lambda sweeps sample
// integer lambda: the resonant block omega = lambda^2 - k^2 = 0 is then on the
// grid, which is both the cleanest and the worst case over lambda.
std::vector<double> integer_log_spaced(double lo, double hi, int count);

// Discretization policies; every reported sweep value is recomputed with
// doubled resolution (and doubled box for Q0) to set the resolved flag.
struct Q0Discretization {
    double box_length = 20.0;
    int modes = 128;
};
Q0Discretization q0_discretization(double gamma, double mu);
int circle_modes(double gamma, double lambda, double omega);

// sigma_min(Q0 - mu) sample on the R^d box surrogate at the policy resolution.
SweepSample q0_sample(double gamma, double mu, double tol = 1e-6);

// --- Theorem 2.1 laboratory -------------------------------------------------

struct BranchEntry {
    double mu = 0.0;
    double sigma = 0.0;
    double ratio = 0.0; // sigma/|mu| on the negative branch
    bool resolved = false;
};

struct Theorem21Result {
    SweepResult positive;                // fit target gamma/(2*gamma+1)
    std::vector<BranchEntry> negative;   // mu <= -1: sigma >= |mu|
    std::vector<BranchEntry> middle;     // |mu| <= 1 band: sigma >= c
    double target_exponent = 0.0;
};

Theorem21Result theorem21_branches(double gamma, const std::vector<double>& mu_grid,
                                   double tol = 1e-6);

// --- Theorem 4.1 laboratory -------------------------------------------------

struct OmegaProbe {
    double lambda = 0.0;
    double omega = 0.0;
    double sigma = 0.0;
    int iterations = 0;
    bool resolved = false;
};

struct Theorem41Result {
    SweepResult worst;   // worst-over-omega sigma per lambda; target 1/(gamma+1)
    SweepResult at_top;  // omega = lambda^2 branch; slope >= 0.9 (Lemma regime)
    std::vector<OmegaProbe> table;
    double delta = 0.25; // regime split delta*lambda^2
    double target_exponent = 0.0;
};

// Deterministic omega probes: anchors {0, d l^2/2, d l^2, (1-d/2) l^2, l^2},
// one negative probe, and 8 log-spaced interior points.
std::vector<double> omega_probes(double gamma, double lambda, double delta);

Theorem41Result theorem41_sweep(double gamma, const std::vector<double>& lambda_grid,
                                double tol = 1e-6);

// --- GCC resolvent laboratory -----------------------------------------------

// sigma_min(P_lambda) on M' x T^1 for x''-independent damping via the partial
// Fourier block decomposition sigma = min_k sigma_min(P_{lambda, lambda^2-k^2});
// blocks with k^2 - lambda^2 above the running minimum are pruned since
// sigma >= |omega| there.
struct ReducedSigma {
    double sigma = 0.0;
    int worst_k = 0;
    int blocks_solved = 0;
    bool resolved = false;
};
ReducedSigma sigma_min_p_lambda_reduced(const DampingProfile& profile, double lambda,
                                        double tol = 1e-6);

struct GccSweepResult {
    SweepResult sweep;
    bool certified = false;
    double max_hit_time = 0.0;
    double target_exponent = 1.0;
};

// Requires a certification verdict from the geometry module; callers pass the
// result in (geometry and resolvent measurements stay independent).
GccSweepResult gcc_resolvent_check(const DampingProfile& profile,
                                   const std::vector<double>& lambda_grid,
                                   int n_second, bool certified, double max_hit_time,
                                   double tol = 1e-6);

} // namespace declab
