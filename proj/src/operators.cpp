#include "declab/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace declab {

double OperatorSpec::shift() const {
    switch (family) {
        case OperatorFamily::p_lambda: return lambda * lambda;
        case OperatorFamily::p_lambda_omega: return omega;
        case OperatorFamily::q0: return mu;
        case OperatorFamily::p_tilde: return omega;
    }
    return 0.0;
}

double OperatorSpec::imag_coef() const {
    return family == OperatorFamily::q0 ? 1.0 : lambda;
}

OperatorSpec make_operator(OperatorFamily family, double lambda, double omega, double mu,
                           DampingProfile damping, Grid grid) {
    if (family != OperatorFamily::q0 && !(lambda > 0.0))
        throw std::invalid_argument("operator: lambda must be positive");
    const bool box_family =
        family == OperatorFamily::q0 || family == OperatorFamily::p_tilde;
    for (int ax = 0; ax < grid.dim(); ++ax) {
        const bool is_box = grid.kinds()[static_cast<std::size_t>(ax)] == AxisKind::box;
        if (box_family && !is_box)
            throw std::invalid_argument("operator: Q0/Ptilde act on truncated-box axes only");
    }
    if (family == OperatorFamily::p_lambda_omega && grid.n_second() != 0)
        throw std::invalid_argument("operator: P_{lambda,omega} acts on the M' factor only");

    OperatorSpec spec;
    spec.family = family;
    spec.lambda = lambda;
    spec.omega = omega;
    spec.mu = mu;
    spec.damping = std::move(damping);
    spec.grid = std::move(grid);

    const int np = spec.grid.n_prime();
    if (box_family) {
        auto W = extend_W(spec.damping);
        spec.coeff = std::make_shared<NodalCoefficient>(
            sample_coefficient(spec.grid, [W](const std::vector<double>& x) { return W(x); }));
    } else if (spec.damping.depends_on_second) {
        const DampingProfile& d = spec.damping;
        spec.coeff = std::make_shared<NodalCoefficient>(sample_coefficient(
            spec.grid, [&d](const std::vector<double>& x) { return eval_b(d, x); }));
    } else {
        const DampingProfile& d = spec.damping;
        spec.coeff = std::make_shared<NodalCoefficient>(
            sample_coefficient(spec.grid, [&d, np](const std::vector<double>& x) {
                std::vector<double> xp(x.begin(), x.begin() + np);
                return eval_b(d, xp);
            }));
    }
    return spec;
}

namespace {

SpectralField apply_signed(const OperatorSpec& spec, const SpectralField& u, double sign) {
    if (!(u.grid == spec.grid)) throw std::invalid_argument("apply: grid mismatch");
    const double shift = spec.shift();
    SpectralField out = u;
    for (std::size_t flat = 0; flat < out.modal.size(); ++flat)
        out.modal[flat] *= spec.grid.wavenumber_sq(flat) - shift;
    SpectralField pot = multiply_dealiased(u, *spec.coeff);
    axpy(out, cplx(0.0, sign * spec.imag_coef()), pot);
    return out;
}

} // namespace

SpectralField apply(const OperatorSpec& spec, const SpectralField& u) {
    return apply_signed(spec, u, +1.0);
}

SpectralField adjoint_apply(const OperatorSpec& spec, const SpectralField& u) {
    return apply_signed(spec, u, -1.0);
}

SpectralField scale_T_alpha(const SpectralField& u, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("scale_T_alpha: alpha must be positive");
    const Grid& g = u.grid;
    for (auto k : g.kinds())
        if (k != AxisKind::box)
            throw std::invalid_argument("scale_T_alpha: box grids only");
    std::vector<double> lengths = g.lengths();
    for (auto& L : lengths) L /= alpha;
    Grid scaled(g.n_prime(), g.n_second(), g.modes(), std::move(lengths), g.kinds());
    SpectralField out(std::move(scaled), u.modal);
    const double fac = std::pow(alpha, 0.5 * g.dim());
    for (auto& c : out.modal) c *= fac;
    return out;
}

double conjugation_residual(double lambda, double omega, const DampingProfile& damping,
                            const SpectralField& u) {
    if (!(lambda > 0.0)) throw std::invalid_argument("conjugation_residual: lambda > 0 required");
    const double gamma = damping.gamma;
    const double alpha = std::pow(lambda, -1.0 / (2.0 * (gamma + 1.0)));
    const double rate = std::pow(lambda, 1.0 / (gamma + 1.0));

    // T_alpha^{-1} u lives on the alpha-scaled box.
    SpectralField v = scale_T_alpha(u, 1.0 / alpha);
    OperatorSpec ptilde = make_p_tilde(lambda, omega, damping, v.grid);
    SpectralField w = scale_T_alpha(apply(ptilde, v), alpha);
    // Rescaling round trip: snap back onto u's grid (lengths agree to round-off).
    for (int ax = 0; ax < u.grid.dim(); ++ax) {
        const auto a = static_cast<std::size_t>(ax);
        if (std::abs(w.grid.lengths()[a] - u.grid.lengths()[a]) >
            1e-12 * u.grid.lengths()[a])
            throw std::runtime_error("conjugation_residual: box round trip failed");
    }
    SpectralField lhs(u.grid, std::move(w.modal));

    OperatorSpec q0 = make_q0(omega / rate, damping, u.grid);
    SpectralField rhs = apply(q0, u);
    for (auto& c : rhs.modal) c *= rate;

    return norm(lhs - rhs) / norm(u);
}

} // namespace declab
