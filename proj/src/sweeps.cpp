#include "declab/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "declab/parallel.hpp"

namespace declab {

namespace {

int pow2_at_least(double x) {
    int n = 64;
    while (n < x && n < (1 << 14)) n *= 2;
    return n;
}

SigmaMinResult solve_or_throw(const OperatorSpec& spec, double tol) {
    // Clustered spectra (strongly negative shifts) converge slowly; the
    // per-iteration cost at these resolutions is negligible.
    SigmaMinResult r = sigma_min(spec, {tol, 500});
    if (!r.converged)
        throw std::runtime_error("sigma_min did not converge within max_iter");
    return r;
}

} // namespace

std::vector<double> log_spaced(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2)
        throw std::invalid_argument("log_spaced: need 0 < lo < hi and count >= 2");
    std::vector<double> v(static_cast<std::size_t>(count));
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < count; ++i)
        v[static_cast<std::size_t>(i)] =
            std::exp(llo + (lhi - llo) * static_cast<double>(i) / (count - 1));
    return v;
}

std::vector<double> integer_log_spaced(double lo, double hi, int count) {
    std::vector<double> out;
    for (double v : log_spaced(lo, hi, count)) {
        const double r = std::max(1.0, std::round(v));
        if (out.empty() || r > out.back()) out.push_back(r);
    }
    return out;
}

Q0Discretization q0_discretization(double gamma, double mu) {
    const double nu = std::sqrt(std::max(mu, 1.0));
    Q0Discretization d;
    d.box_length = std::max(8.0 * std::pow(nu, 1.0 / (2.0 * gamma + 1.0)), 20.0);
    const double kmax = std::max(1.6 * nu, 10.0);
    d.modes = std::max(128, pow2_at_least(d.box_length * kmax / std::numbers::pi));
    return d;
}

int circle_modes(double gamma, double lambda, double omega) {
    const double conc = 8.0 * std::pow(lambda, 1.0 / (2.0 * (gamma + 1.0)));
    const double kmax = std::max({1.4 * std::sqrt(std::max(omega, 0.0)), conc, 24.0});
    return pow2_at_least(2.2 * kmax);
}

namespace {

double q0_sigma_at(double gamma, double mu, double L, int N, double tol, int* iters) {
    DampingProfile d = radial_power_profile(gamma, {0.0});
    OperatorSpec spec = make_q0(mu, std::move(d), make_box_grid({N}, {L}));
    SigmaMinResult r = solve_or_throw(spec, tol);
    if (iters) *iters = r.iterations;
    return r.sigma;
}

double circle_sigma_at(const DampingProfile& profile, double lambda, double omega, int N,
                       double tol, int* iters) {
    OperatorSpec spec =
        make_p_lambda_omega(lambda, omega, profile, make_torus_grid(1, 0, {N}));
    SigmaMinResult r = solve_or_throw(spec, tol);
    if (iters) *iters = r.iterations;
    return r.sigma;
}

} // namespace

SweepSample q0_sample(double gamma, double mu, double tol) {
    const Q0Discretization d = q0_discretization(gamma, mu);
    int it_base = 0, it_fine = 0;
    const double coarse = q0_sigma_at(gamma, mu, d.box_length, d.modes, tol, &it_base);
    const double fine =
        q0_sigma_at(gamma, mu, 2.0 * d.box_length, 2 * d.modes, tol, &it_fine);
    SweepSample s;
    s.parameter = mu;
    s.sigma = fine;
    s.iterations = it_fine;
    s.resolved = std::abs(fine - coarse) <= 0.01 * fine;
    return s;
}

Theorem21Result theorem21_branches(double gamma, const std::vector<double>& mu_grid,
                                   double tol) {
    Theorem21Result out;
    out.target_exponent = gamma / (2.0 * gamma + 1.0);
    out.positive.parameter_name = "mu";

    std::vector<SweepSample> all(mu_grid.size());
    parallel_for(mu_grid.size(), [&](std::size_t i) {
        all[i] = q0_sample(gamma, mu_grid[i], tol);
    });

    for (const auto& s : all) {
        if (s.parameter >= 10.0) {
            out.positive.samples.push_back(s);
        } else if (s.parameter <= -1.0) {
            out.negative.push_back(
                {s.parameter, s.sigma, s.sigma / std::abs(s.parameter), s.resolved});
        } else {
            out.middle.push_back({s.parameter, s.sigma, s.sigma, s.resolved});
        }
    }

    if (out.positive.samples.size() >= 5) {
        std::sort(out.positive.samples.begin(), out.positive.samples.end(),
                  [](const SweepSample& a, const SweepSample& b) {
                      return a.parameter < b.parameter;
                  });
        const double lo = out.positive.samples.front().parameter;
        const double hi = out.positive.samples.back().parameter;
        const auto [wlo, whi] = default_fit_window(lo, hi);
        std::vector<std::pair<double, double>> pts;
        for (const auto& s : out.positive.samples) pts.emplace_back(s.parameter, s.sigma);
        const FitResult f = fit_exponent(pts, wlo, whi);
        out.positive.fitted_exponent = f.slope;
        out.positive.fit_residual = f.residual;
        out.positive.window_lo = wlo;
        out.positive.window_hi = whi;
    }
    return out;
}

std::vector<double> omega_probes(double gamma, double lambda, double delta) {
    const double l2 = lambda * lambda;
    std::vector<double> probes = {0.0, 0.5 * delta * l2, delta * l2,
                                  (1.0 - 0.5 * delta) * l2, l2};
    const double lo = std::max(0.5 * std::pow(lambda, 1.0 / (gamma + 1.0)), 1e-2);
    const double hi = 0.9 * delta * l2;
    if (hi > lo)
        for (double w : log_spaced(lo, hi, 8)) probes.push_back(w);
    return probes;
}

Theorem41Result theorem41_sweep(double gamma, const std::vector<double>& lambda_grid,
                                double tol) {
    Theorem41Result out;
    out.target_exponent = 1.0 / (gamma + 1.0);
    out.worst.parameter_name = "lambda";
    out.at_top.parameter_name = "lambda";
    const DampingProfile profile = periodic_power_profile(gamma);

    struct PerLambda {
        SweepSample worst;
        SweepSample top;
        std::vector<OmegaProbe> probes;
    };
    std::vector<PerLambda> rows(lambda_grid.size());

    parallel_for(lambda_grid.size(), [&](std::size_t i) {
        const double lambda = lambda_grid[i];
        PerLambda row;
        double worst_sigma = 0.0;
        for (double omega : omega_probes(gamma, lambda, out.delta)) {
            const int N = circle_modes(gamma, lambda, omega);
            int it = 0, it2 = 0;
            const double coarse = circle_sigma_at(profile, lambda, omega, N, tol, &it);
            const double fine = circle_sigma_at(profile, lambda, omega, 2 * N, tol, &it2);
            OmegaProbe p;
            p.lambda = lambda;
            p.omega = omega;
            p.sigma = fine;
            p.iterations = it2;
            p.resolved = std::abs(fine - coarse) <= 0.01 * fine;
            row.probes.push_back(p);
            if (worst_sigma == 0.0 || p.sigma < worst_sigma) {
                worst_sigma = p.sigma;
                row.worst = {lambda, p.sigma, p.iterations, p.resolved};
            }
            if (omega == lambda * lambda)
                row.top = {lambda, p.sigma, p.iterations, p.resolved};
        }
        rows[i] = std::move(row);
    });

    for (auto& row : rows) {
        out.worst.samples.push_back(row.worst);
        out.at_top.samples.push_back(row.top);
        for (auto& p : row.probes) out.table.push_back(p);
    }

    const auto [wlo, whi] =
        default_fit_window(lambda_grid.front(), lambda_grid.back());
    for (SweepResult* r : {&out.worst, &out.at_top}) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& s : r->samples) pts.emplace_back(s.parameter, s.sigma);
        const FitResult f = fit_exponent(pts, wlo, whi);
        r->fitted_exponent = f.slope;
        r->fit_residual = f.residual;
        r->window_lo = wlo;
        r->window_hi = whi;
    }
    return out;
}

namespace {

ReducedSigma reduced_at_resolution(const DampingProfile& profile, double lambda, double tol,
                                   int resolution_factor) {
    ReducedSigma best;
    const int k0 = static_cast<int>(std::llround(lambda));
    auto block_sigma = [&](int k) {
        const double omega = lambda * lambda - static_cast<double>(k) * k;
        const int N = resolution_factor * circle_modes(profile.gamma, lambda, omega);
        int it = 0;
        const double s = circle_sigma_at(profile, lambda, omega, N, tol, &it);
        ++best.blocks_solved;
        if (best.blocks_solved == 1 || s < best.sigma) {
            best.sigma = s;
            best.worst_k = k;
        }
    };
    // Start at the resonant block omega ~ 0 and expand; blocks with
    // k^2 - lambda^2 >= current best are pruned by sigma >= |omega|.
    block_sigma(std::max(k0, 0));
    for (int k = std::max(k0, 0) - 1; k >= 0; --k) block_sigma(k);
    for (int k = std::max(k0, 0) + 1;; ++k) {
        const double neg = static_cast<double>(k) * k - lambda * lambda;
        if (neg >= best.sigma) break;
        block_sigma(k);
    }
    return best;
}

} // namespace

ReducedSigma sigma_min_p_lambda_reduced(const DampingProfile& profile, double lambda,
                                        double tol) {
    ReducedSigma coarse = reduced_at_resolution(profile, lambda, tol, 1);
    ReducedSigma fine = reduced_at_resolution(profile, lambda, tol, 2);
    fine.resolved = std::abs(fine.sigma - coarse.sigma) <= 0.01 * fine.sigma;
    return fine;
}

GccSweepResult gcc_resolvent_check(const DampingProfile& profile,
                                   const std::vector<double>& lambda_grid, int n_second,
                                   bool certified, double max_hit_time, double tol) {
    if (!certified)
        throw std::invalid_argument("gcc_resolvent_check: profile not certified");
    if (n_second < 0 || n_second > 1)
        throw std::invalid_argument("gcc_resolvent_check: n_second must be 0 or 1");

    GccSweepResult out;
    out.certified = certified;
    out.max_hit_time = max_hit_time;
    out.sweep.parameter_name = "lambda";
    out.sweep.samples.resize(lambda_grid.size());

    parallel_for(lambda_grid.size(), [&](std::size_t i) {
        const double lambda = lambda_grid[i];
        SweepSample s;
        s.parameter = lambda;
        if (n_second == 0) {
            const int N = circle_modes(profile.gamma, lambda, lambda * lambda);
            int it = 0, it2 = 0;
            const double coarse =
                circle_sigma_at(profile, lambda, lambda * lambda, N, tol, &it);
            const double fine =
                circle_sigma_at(profile, lambda, lambda * lambda, 2 * N, tol, &it2);
            s.sigma = fine;
            s.iterations = it2;
            s.resolved = std::abs(fine - coarse) <= 0.01 * fine;
        } else {
            const ReducedSigma r = sigma_min_p_lambda_reduced(profile, lambda, tol);
            s.sigma = r.sigma;
            s.iterations = r.blocks_solved;
            s.resolved = r.resolved;
        }
        out.sweep.samples[i] = s;
    });

    const auto [wlo, whi] =
        default_fit_window(lambda_grid.front(), lambda_grid.back());
    std::vector<std::pair<double, double>> pts;
    for (const auto& s : out.sweep.samples) pts.emplace_back(s.parameter, s.sigma);
    const FitResult f = fit_exponent(pts, wlo, whi);
    out.sweep.fitted_exponent = f.slope;
    out.sweep.fit_residual = f.residual;
    out.sweep.window_lo = wlo;
    out.sweep.window_hi = whi;
    return out;
}

} // namespace declab
