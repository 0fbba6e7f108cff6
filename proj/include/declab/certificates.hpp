#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "declab/damping.hpp"
#include "declab/field.hpp"
#include "declab/grid.hpp"

namespace declab {

// --- Quasimodes (saturation of the resolvent lower bound) --------------------

// u_k(x',x'') = c1 k^{alpha n'/2} chi(k^alpha x') e^{i k x1''} / (2 pi)^{n''/2},
// alpha = 1/(2(1+gamma)), c1 = 1/||chi||_{L^2}; concentrated at x' scale
// k^{-alpha}, normalized in L^2(M).
struct Quasimode {
    int k = 0;
    double gamma = 1.0;
    double alpha = 0.25;
    double eps0 = 1.0;
    SpectralField field;      // normalized: ||field|| = 1 in the discrete norm
    double c1_analytic = 0.0; // 1/||chi||_{L^2}, continuum normalization
    double c1_discrete = 0.0; // the constant actually applied on this grid
};

// The cutoff: plateau bump on |x| < eps0, identically 1 for |x| <= 0.3 eps0.
double quasimode_cutoff(double x, double eps0);
// High-accuracy ||chi||_{L^2} on the eps0-ball (n' = 1 or radial n' = 2).
double quasimode_cutoff_norm(double eps0, int n_prime);

Quasimode build_quasimode(int k, double gamma, const Grid& grid, double eps0 = 1.0);

// ||P_k u_k|| / k^{1/(gamma+1)}; bounded uniformly in k.
double quasimode_ratio(int k, double gamma, const DampingProfile& damping, const Grid& grid,
                       double eps0 = 1.0);

// --- Appendix C sharpness witness -------------------------------------------

// Modulated dilation u = e^{i mu^{1/2} x_1} mu^{-kappa d/2} w0(x/mu^kappa),
// kappa = 1/(4 gamma + 2); returns ||(Q0 - mu) u|| / mu^{gamma/(2 gamma+1)}.
// w0 is the exponential bump, normalized.
double sharpness_witness(double mu, double gamma, const DampingProfile& damping,
                         const Grid& grid);

// --- The scalar certificate f(lambda, omega) ---------------------------------

// f = 1 + (omega/lambda^{1/(gamma+1)})^{2 gamma/(2 gamma+1)}
//       - c0 omega lambda^{-2/(gamma+1)}.
double f_eval(double lambda, double omega, double c0, double gamma);

struct FScanResult {
    bool passed = true;
    double min_value = 1.0;
    double worst_lambda = 0.0;
    double worst_omega = 0.0;
};

// Asserts f >= 1 - 1e-12 on omega in [0, c0^{-(2 gamma+1)} lambda^2] over a
// dense deterministic lattice, for each lambda in the grid.
FScanResult f_scan(const std::vector<double>& lambda_grid, double c0, double gamma,
                   int omega_count = 50);

// --- Partial Fourier reduction identity --------------------------------------

// Relative residual of ||P_lambda u||^2 = (2 pi)^{n''} sum_k
// ||P_{lambda, lambda^2-|k|^2} uhat_k||^2 for x''-independent damping.
double reduction_identity_residual(const SpectralField& u, double lambda,
                                   const DampingProfile& damping);

// --- Phase-space region taxonomy ---------------------------------------------

enum class RegionTag { gcc_region, core_2_1, elliptic_damped_2_2, propagative_2_3 };

std::string to_string(RegionTag tag);

struct RegionThresholds {
    double small_ratio = 0.125; // "a << b" means a < small_ratio * b
    double char_band = 0.125;   // characteristic set band | |xi|^2 - l^2 | <= band * l^2
};

// Classification of a characteristic-set point, total and exclusive with the
// priority order [1] > [2.2] > [2.1] > [2.3]. Throws if the point is farther
// than the band from the characteristic set.
RegionTag classify_region(const std::vector<double>& x_prime,
                          const std::vector<double>& xi_prime,
                          const std::vector<double>& xi_second, double lambda, double gamma,
                          const RegionThresholds& thr = {});

// --- Second-microlocalization metric -----------------------------------------

// Lambda(xi) = sqrt(1+|xi|^2); mu(xi) = 1 + (|xi'|^2 Lambda^{-1/(gamma+1)})^
// {(gamma+1)/(2 gamma+1)} >= 1, the gain of the metric.
double big_lambda(const std::vector<double>& xi_prime, const std::vector<double>& xi_second);
double mu_weight(const std::vector<double>& xi_prime, const std::vector<double>& xi_second,
                 double gamma);

// Value of the metric g_{x,xi}(T) on a tangent vector T split as
// (z', z'', zeta', zeta'').
double metric_g(const std::vector<double>& xi_prime, const std::vector<double>& xi_second,
                double gamma, const std::vector<double>& z_prime,
                const std::vector<double>& z_second, const std::vector<double>& zeta_prime,
                const std::vector<double>& zeta_second);

struct SlowVariationResult {
    double max_ratio = 1.0; // empirical constant C
    int pairs_accepted = 0;
};

// Monte Carlo probe of slow variation: pairs X, Y with g_Y(Y-X) <= r^2 and
// random tangents T; returns the extremal ratio g_X(T)/g_Y(T).
SlowVariationResult slow_variation_probe(double gamma, int n_prime, int n_second,
                                         int sample_count, double r, std::uint64_t seed);

} // namespace declab
