#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "declab/fft.hpp"
#include "declab/grid.hpp"

namespace declab {

// Modal coefficient array on a product Fourier grid; the discrete stand-in
// for u in L^2(M). modal[flat] is the coefficient of e^{i k.x} at the
// multi-index behind flat (row-major, per-axis wrap-ordered wavenumbers).
struct SpectralField {
    Grid grid;
    std::vector<cplx> modal;

    SpectralField() = default;
    explicit SpectralField(Grid g)
        : grid(std::move(g)), modal(grid.total_modes(), cplx(0.0, 0.0)) {}
    SpectralField(Grid g, std::vector<cplx> m);
};

SpectralField to_modal(const Grid& grid, const std::vector<cplx>& nodal);
std::vector<cplx> to_nodal(const SpectralField& f);

// L^2(M) inner product and norms (physical measure, see Grid conventions).
cplx inner(const SpectralField& a, const SpectralField& b);
double norm_sq(const SpectralField& f);
double norm(const SpectralField& f);

SpectralField& axpy(SpectralField& y, cplx alpha, const SpectralField& x);
SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(cplx s, const SpectralField& a);

// Pointwise modal multiplier uhat_k -> chi(k) uhat_k. The symbol receives the
// wavenumber vector of each mode.
SpectralField fourier_multiplier(const SpectralField& f,
                                 const std::function<cplx(const std::vector<double>&)>& chi);

// Same, for symbols that depend on |k|^2 only (cheaper, no allocation per mode).
SpectralField isotropic_multiplier(const SpectralField& f,
                                   const std::function<cplx(double)>& chi_of_ksq);

// Partial Fourier decomposition in the torus variables: u(x',x'') =
// sum_k uhat_k(x') e^{i k.x''}. Returns pairs (integer torus mode vector k,
// slice field on the M' subgrid). sum_k ||uhat_k||^2 * (2*pi)^{n''} = ||u||^2.
std::vector<std::pair<std::vector<int>, SpectralField>>
partial_modes(const SpectralField& f);

// Semiclassical Sobolev norm with symbol (|k|^2 + lambda^2)^{s/2}.
double sobolev_norm(const SpectralField& f, double s, double lambda);

// Nodal samples of a real coefficient on the 3/2 zero-padded companion grid,
// used for dealiased products.
struct NodalCoefficient {
    Grid fine;
    std::vector<double> values;
};

NodalCoefficient sample_coefficient(const Grid& grid,
                                    const std::function<double(const std::vector<double>&)>& c);

// Dealiased product c(x) * u: pad modal data to the fine grid, multiply at the
// fine nodes, transform back and truncate.
SpectralField multiply_dealiased(const SpectralField& u, const NodalCoefficient& c);

// Zero-pad / truncate between a grid and its padded() companion.
std::vector<cplx> pad_modal(const SpectralField& u, const Grid& fine);
SpectralField truncate_modal(const Grid& coarse, const Grid& fine, const std::vector<cplx>& fine_modal);

// Deterministic complex Gaussian field (unit-variance coefficients).
SpectralField random_field(const Grid& grid, std::uint64_t seed);

} // namespace declab
