#include "declab/certificates.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "declab/bumps.hpp"
#include "declab/operators.hpp"

namespace declab {

namespace {
constexpr double kPlateauFrac = 0.3;
constexpr double two_pi = 2.0 * std::numbers::pi;

double norm_sq_vec(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}
} // namespace

double quasimode_cutoff(double x, double eps0) {
    return plateau_bump(x / eps0, kPlateauFrac);
}

double quasimode_cutoff_norm(double eps0, int n_prime) {
    // Trapezoid on a fine lattice; chi is C_c-infinity so this converges
    // beyond all orders.
    const int n = 1 << 15;
    const double h = eps0 / n;
    double acc = 0.0;
    if (n_prime == 1) {
        for (int i = -n; i <= n; ++i) {
            const double x = h * i;
            const double c = quasimode_cutoff(x, eps0);
            const double w = (i == -n || i == n) ? 0.5 : 1.0;
            acc += w * c * c;
        }
        return std::sqrt(acc * h);
    }
    if (n_prime == 2) {
        for (int i = 0; i <= n; ++i) {
            const double r = h * i;
            const double c = quasimode_cutoff(r, eps0);
            const double w = (i == 0 || i == n) ? 0.5 : 1.0;
            acc += w * c * c * two_pi * r;
        }
        return std::sqrt(acc * h);
    }
    throw std::invalid_argument("quasimode_cutoff_norm: n' in {1,2} only");
}

Quasimode build_quasimode(int k, double gamma, const Grid& grid, double eps0) {
    if (k < 1) throw std::invalid_argument("build_quasimode: k must be positive");
    if (grid.n_second() < 1)
        throw std::invalid_argument("build_quasimode: grid needs a torus factor");
    const int np = grid.n_prime();
    if (np < 1 || np > 2)
        throw std::invalid_argument("build_quasimode: n' in {1,2} only");

    const double alpha = 1.0 / (2.0 * (1.0 + gamma));
    const double ka = std::pow(static_cast<double>(k), alpha);
    const double support = eps0 / ka;

    // Bump must be resolvable and fit inside the transversal factor; the
    // oscillation e^{i k x''} must live on the first torus axis.
    for (int ax = 0; ax < np; ++ax) {
        const double dx = grid.lengths()[static_cast<std::size_t>(ax)] /
                          grid.modes()[static_cast<std::size_t>(ax)];
        if (support < 4.0 * dx || 2.0 * support > grid.lengths()[static_cast<std::size_t>(ax)])
            throw std::invalid_argument("build_quasimode: k not resolvable on grid");
    }
    const int second_axis = np;
    if (k > grid.modes()[static_cast<std::size_t>(second_axis)] / 2 - 1)
        throw std::invalid_argument("build_quasimode: torus mode k not on grid");

    const double c1 = 1.0 / quasimode_cutoff_norm(eps0, np);
    const double amp = c1 * std::pow(static_cast<double>(k), alpha * np / 2.0) /
                       std::pow(two_pi, 0.5 * grid.n_second());

    std::vector<cplx> nodal(grid.total_modes());
    std::vector<int> idx;
    for (std::size_t flat = 0; flat < nodal.size(); ++flat) {
        grid.unflatten(flat, idx);
        double r2 = 0.0;
        for (int ax = 0; ax < np; ++ax) {
            const double x = grid.coord(ax, idx[static_cast<std::size_t>(ax)]);
            r2 += x * x;
        }
        const double chi = quasimode_cutoff(ka * std::sqrt(r2), eps0);
        if (chi == 0.0) {
            nodal[flat] = cplx(0.0, 0.0);
            continue;
        }
        const double xs = grid.coord(second_axis, idx[static_cast<std::size_t>(second_axis)]);
        nodal[flat] = amp * chi * std::polar(1.0, k * xs);
    }

    Quasimode q;
    q.k = k;
    q.gamma = gamma;
    q.alpha = alpha;
    q.eps0 = eps0;
    q.field = to_modal(grid, nodal);
    // Normalize in the discrete norm; the gap to the continuum constant is a
    // pure grid-quadrature effect and is reported for resolution checks.
    const double discrete_norm = norm(q.field);
    for (auto& c : q.field.modal) c /= discrete_norm;
    q.c1_analytic = c1;
    q.c1_discrete = c1 / discrete_norm;
    return q;
}

double quasimode_ratio(int k, double gamma, const DampingProfile& damping, const Grid& grid,
                       double eps0) {
    const Quasimode q = build_quasimode(k, gamma, grid, eps0);
    OperatorSpec spec = make_p_lambda(static_cast<double>(k), damping, grid);
    const double num = norm(apply(spec, q.field));
    return num / std::pow(static_cast<double>(k), 1.0 / (gamma + 1.0));
}

double sharpness_witness(double mu, double gamma, const DampingProfile& damping,
                         const Grid& grid) {
    if (!(mu > 0.0)) throw std::invalid_argument("sharpness_witness: mu must be positive");
    if (grid.dim() != 1)
        throw std::invalid_argument("sharpness_witness: 1-D box witness only");
    const double kappa = 1.0 / (4.0 * gamma + 2.0);
    const double dil = std::pow(mu, kappa);
    const double mod = std::sqrt(mu);
    if (2.0 * dil > 0.9 * grid.lengths()[0])
        throw std::invalid_argument("sharpness_witness: support escapes box");

    // L^2 norm of the unit exponential bump, for normalization of w0.
    const int n = 1 << 15;
    const double h = 1.0 / n;
    double acc = 0.0;
    for (int i = -n; i <= n; ++i) {
        const double c = exp_bump(h * i);
        acc += (std::abs(i) == n ? 0.5 : 1.0) * c * c;
    }
    const double w0_norm = std::sqrt(acc * h);

    const int N = grid.modes()[0];
    std::vector<cplx> nodal(static_cast<std::size_t>(N));
    const double amp = 1.0 / (w0_norm * std::sqrt(dil));
    for (int j = 0; j < N; ++j) {
        const double x = grid.coord(0, j);
        const double env = exp_bump(x / dil);
        nodal[static_cast<std::size_t>(j)] =
            env == 0.0 ? cplx(0.0, 0.0) : amp * env * std::polar(1.0, mod * x);
    }
    SpectralField u = to_modal(grid, nodal);

    OperatorSpec q0 = make_q0(mu, damping, grid);
    const double num = norm(apply(q0, u));
    return num / (std::pow(mu, gamma / (2.0 * gamma + 1.0)) * norm(u));
}

double f_eval(double lambda, double omega, double c0, double gamma) {
    return 1.0 + std::pow(omega / std::pow(lambda, 1.0 / (gamma + 1.0)),
                          2.0 * gamma / (2.0 * gamma + 1.0)) -
           c0 * omega * std::pow(lambda, -2.0 / (gamma + 1.0));
}

FScanResult f_scan(const std::vector<double>& lambda_grid, double c0, double gamma,
                   int omega_count) {
    if (!(c0 > 0.0) || !(gamma > 0.0) || omega_count < 2)
        throw std::invalid_argument("f_scan: bad parameters");
    FScanResult out;
    for (double lambda : lambda_grid) {
        if (!(lambda > 0.0)) throw std::invalid_argument("f_scan: lambda must be positive");
        const double omega_star = std::pow(c0, -(2.0 * gamma + 1.0)) * lambda * lambda;
        for (int j = 0; j < omega_count; ++j) {
            const double omega =
                omega_star * static_cast<double>(j) / (omega_count - 1);
            // Algebraically f - 1 = B ((omega*/omega)^{1/(2 gamma+1)} - 1) with
            // B = c0 omega lambda^{-2/(gamma+1)}; evaluated this way the
            // boundary omega = omega* is exact instead of a cancellation of
            // two large powers.
            double f;
            if (omega == 0.0) {
                f = 1.0;
            } else {
                const double B = c0 * omega * std::pow(lambda, -2.0 / (gamma + 1.0));
                f = 1.0 +
                    B * (std::pow(omega_star / omega, 1.0 / (2.0 * gamma + 1.0)) - 1.0);
            }
            if (f < out.min_value) {
                out.min_value = f;
                out.worst_lambda = lambda;
                out.worst_omega = omega;
            }
        }
    }
    out.passed = out.min_value >= 1.0 - 1e-12;
    return out;
}

double reduction_identity_residual(const SpectralField& u, double lambda,
                                   const DampingProfile& damping) {
    if (u.grid.n_second() < 1)
        throw std::invalid_argument("reduction_identity_residual: grid needs a torus factor");
    if (damping.depends_on_second)
        throw std::invalid_argument(
            "reduction_identity_residual: damping must not depend on x''");

    OperatorSpec full = make_p_lambda(lambda, damping, u.grid);
    const double lhs = norm_sq(apply(full, u));

    const Grid sub = u.grid.prime_subgrid();
    double rhs = 0.0;
    for (const auto& [kvec, slice] : partial_modes(u)) {
        double ksq = 0.0;
        for (int kc : kvec) ksq += static_cast<double>(kc) * kc;
        OperatorSpec block =
            make_p_lambda_omega(lambda, lambda * lambda - ksq, damping, sub);
        rhs += norm_sq(apply(block, slice));
    }
    rhs *= std::pow(two_pi, u.grid.n_second());
    return std::abs(lhs - rhs) / lhs;
}

std::string to_string(RegionTag tag) {
    switch (tag) {
        case RegionTag::gcc_region: return "GCC_REGION";
        case RegionTag::core_2_1: return "CORE_2_1";
        case RegionTag::elliptic_damped_2_2: return "ELLIPTIC_DAMPED_2_2";
        case RegionTag::propagative_2_3: return "PROPAGATIVE_2_3";
    }
    return "?";
}

RegionTag classify_region(const std::vector<double>& x_prime,
                          const std::vector<double>& xi_prime,
                          const std::vector<double>& xi_second, double lambda, double gamma,
                          const RegionThresholds& thr) {
    const double xp2 = norm_sq_vec(x_prime);
    const double kp2 = norm_sq_vec(xi_prime);
    const double ks2 = norm_sq_vec(xi_second);
    const double l2 = lambda * lambda;
    if (std::abs(kp2 + ks2 - l2) > thr.char_band * l2)
        throw std::invalid_argument("classify_region: point far from characteristic set");

    const double t = thr.small_ratio;
    if (kp2 >= t * ks2 || xp2 >= t) return RegionTag::gcc_region;
    if (xp2 >= t * std::pow(lambda, -1.0 / (gamma + 1.0)))
        return RegionTag::elliptic_damped_2_2;
    if (kp2 < t * std::pow(lambda, 1.0 / (gamma + 1.0))) return RegionTag::core_2_1;
    return RegionTag::propagative_2_3;
}

double big_lambda(const std::vector<double>& xi_prime, const std::vector<double>& xi_second) {
    return std::sqrt(1.0 + norm_sq_vec(xi_prime) + norm_sq_vec(xi_second));
}

double mu_weight(const std::vector<double>& xi_prime, const std::vector<double>& xi_second,
                 double gamma) {
    const double L = big_lambda(xi_prime, xi_second);
    const double base = norm_sq_vec(xi_prime) * std::pow(L, -1.0 / (gamma + 1.0));
    return 1.0 + std::pow(base, (gamma + 1.0) / (2.0 * gamma + 1.0));
}

double metric_g(const std::vector<double>& xi_prime, const std::vector<double>& xi_second,
                double gamma, const std::vector<double>& z_prime,
                const std::vector<double>& z_second, const std::vector<double>& zeta_prime,
                const std::vector<double>& zeta_second) {
    const double L = big_lambda(xi_prime, xi_second);
    const double mu = mu_weight(xi_prime, xi_second, gamma);
    const double e = 1.0 / (gamma + 1.0);
    const double axis_zp = std::pow(L, -e) * std::pow(mu, e);
    const double axis_kp = std::pow(L, e) * std::pow(mu, (2.0 * gamma + 1.0) * e);
    return norm_sq_vec(z_prime) / axis_zp + norm_sq_vec(zeta_prime) / axis_kp +
           norm_sq_vec(z_second) + norm_sq_vec(zeta_second) / (L * L);
}

SlowVariationResult slow_variation_probe(double gamma, int n_prime, int n_second,
                                         int sample_count, double r, std::uint64_t seed) {
    if (!(r > 0.0) || r > 1.0)
        throw std::invalid_argument("slow_variation_probe: r in (0,1] required");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::uniform_real_distribution<double> logmag(std::log(1e-2), std::log(1e3));
    std::normal_distribution<double> gauss(0.0, 1.0);

    auto sample_xi = [&](std::vector<double>& v) {
        for (auto& x : v) x = uni(rng) * std::exp(logmag(rng));
    };
    auto sample_tan = [&](std::vector<double>& v) {
        for (auto& x : v) x = gauss(rng);
    };

    SlowVariationResult out;
    std::vector<double> kp(static_cast<std::size_t>(n_prime));
    std::vector<double> ks(static_cast<std::size_t>(n_second));
    std::vector<double> zp(static_cast<std::size_t>(n_prime)), zs(static_cast<std::size_t>(n_second));
    std::vector<double> wp(static_cast<std::size_t>(n_prime)), ws(static_cast<std::size_t>(n_second));
    std::vector<double> kp2(kp), ks2(ks);

    for (int s = 0; s < sample_count; ++s) {
        sample_xi(kp);
        sample_xi(ks);
        // Displace within the g_X ball of radius r/2, then verify the g_Y
        // admission criterion g_Y(Y-X) <= r^2 at the displaced point. The base
        // point's x-part is immaterial: the metric depends on xi alone.
        sample_tan(zp);
        sample_tan(zs);
        sample_tan(wp);
        sample_tan(ws);
        const double g = metric_g(kp, ks, gamma, zp, zs, wp, ws);
        const double scale = 0.5 * r / std::sqrt(std::max(g, 1e-300));
        for (std::size_t i = 0; i < kp.size(); ++i) kp2[i] = kp[i] + scale * wp[i];
        for (std::size_t i = 0; i < ks.size(); ++i) ks2[i] = ks[i] + scale * ws[i];

        std::vector<double> dxp(zp.size()), dxs(zs.size()), dkp(wp.size()), dks(ws.size());
        for (std::size_t i = 0; i < zp.size(); ++i) dxp[i] = scale * zp[i];
        for (std::size_t i = 0; i < zs.size(); ++i) dxs[i] = scale * zs[i];
        for (std::size_t i = 0; i < wp.size(); ++i) dkp[i] = scale * wp[i];
        for (std::size_t i = 0; i < ws.size(); ++i) dks[i] = scale * ws[i];
        if (metric_g(kp2, ks2, gamma, dxp, dxs, dkp, dks) > r * r) continue;
        ++out.pairs_accepted;

        std::vector<double> tp(zp.size()), ts(zs.size()), up(wp.size()), us(ws.size());
        sample_tan(tp);
        sample_tan(ts);
        sample_tan(up);
        sample_tan(us);
        const double gx = metric_g(kp, ks, gamma, tp, ts, up, us);
        const double gy = metric_g(kp2, ks2, gamma, tp, ts, up, us);
        const double ratio = gx / gy;
        out.max_ratio = std::max({out.max_ratio, ratio, 1.0 / ratio});
    }
    return out;
}

} // namespace declab
