#pragma once

#include <memory>

#include "declab/damping.hpp"
#include "declab/field.hpp"
#include "declab/grid.hpp"

namespace declab {

// The operator families under study:
//   p_lambda       : -Delta - lambda^2 + i lambda b(x')     on M' x T^{n''}
//   p_lambda_omega : -Delta - omega    + i lambda b(x')     on M'
//   q0             : -Delta - mu       + i W(x)             on the R^d box surrogate
//   p_tilde        : -Delta - omega    + i lambda W(x)      on the R^d box surrogate
// W is the homogeneous extension of the damping profile (extend_W).
enum class OperatorFamily { p_lambda, p_lambda_omega, q0, p_tilde };

struct OperatorSpec {
    OperatorFamily family = OperatorFamily::p_lambda;
    double lambda = 1.0;
    double omega = 0.0;
    double mu = 0.0;
    DampingProfile damping;
    Grid grid;
    // Potential samples on the padded grid, fixed at construction.
    std::shared_ptr<const NodalCoefficient> coeff;

    double shift() const;      // the real Fourier-diagonal shift
    double imag_coef() const;  // coefficient of the imaginary potential term
};

OperatorSpec make_operator(OperatorFamily family, double lambda, double omega, double mu,
                           DampingProfile damping, Grid grid);

inline OperatorSpec make_p_lambda(double lambda, DampingProfile d, Grid g) {
    return make_operator(OperatorFamily::p_lambda, lambda, 0.0, 0.0, std::move(d), std::move(g));
}
inline OperatorSpec make_p_lambda_omega(double lambda, double omega, DampingProfile d, Grid g) {
    return make_operator(OperatorFamily::p_lambda_omega, lambda, omega, 0.0, std::move(d), std::move(g));
}
inline OperatorSpec make_q0(double mu, DampingProfile d, Grid g) {
    return make_operator(OperatorFamily::q0, 1.0, 0.0, mu, std::move(d), std::move(g));
}
inline OperatorSpec make_p_tilde(double lambda, double omega, DampingProfile d, Grid g) {
    return make_operator(OperatorFamily::p_tilde, lambda, omega, 0.0, std::move(d), std::move(g));
}

SpectralField apply(const OperatorSpec& spec, const SpectralField& u);
SpectralField adjoint_apply(const OperatorSpec& spec, const SpectralField& u);

// Unitary dilation (T_alpha u)(x) = alpha^{d/2} u(alpha x), realized exactly by
// reinterpreting the modal coefficients on the rescaled box (lengths L/alpha).
// Box grids only.
SpectralField scale_T_alpha(const SpectralField& u, double alpha);

// || T_alpha Ptilde_{lambda,omega} T_alpha^{-1} u
//      - lambda^{1/(gamma+1)} (Q_0 - omega lambda^{-1/(gamma+1)}) u || / ||u||
// with alpha = lambda^{-1/(2(gamma+1))}; exact in the continuum for power-type
// W, so the value measures pure discretization error.
double conjugation_residual(double lambda, double omega, const DampingProfile& damping,
                            const SpectralField& u);

} // namespace declab
