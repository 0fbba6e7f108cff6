#include "declab/field.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace declab {

namespace {

// Per-axis phase tables e^{-i k_m L/2} translating between the centered node
// convention and the 0-based DFT kernel.
std::vector<std::vector<cplx>> phase_tables(const Grid& g) {
    std::vector<std::vector<cplx>> ph(static_cast<std::size_t>(g.dim()));
    for (int ax = 0; ax < g.dim(); ++ax) {
        const int N = g.modes()[static_cast<std::size_t>(ax)];
        const double L = g.lengths()[static_cast<std::size_t>(ax)];
        auto& t = ph[static_cast<std::size_t>(ax)];
        t.resize(static_cast<std::size_t>(N));
        for (int m = 0; m < N; ++m) {
            const double k = g.wavenumber(ax, m);
            t[static_cast<std::size_t>(m)] = std::polar(1.0, -0.5 * k * L);
        }
    }
    return ph;
}

void apply_phases(const Grid& g, std::vector<cplx>& data, bool conjugate) {
    const auto ph = phase_tables(g);
    std::vector<int> idx;
    for (std::size_t flat = 0; flat < data.size(); ++flat) {
        std::size_t rem = flat;
        cplx p(1.0, 0.0);
        for (int ax = g.dim() - 1; ax >= 0; --ax) {
            const auto N = static_cast<std::size_t>(g.modes()[static_cast<std::size_t>(ax)]);
            p *= ph[static_cast<std::size_t>(ax)][rem % N];
            rem /= N;
        }
        data[flat] *= conjugate ? std::conj(p) : p;
    }
}

} // namespace

SpectralField::SpectralField(Grid g, std::vector<cplx> m)
    : grid(std::move(g)), modal(std::move(m)) {
    if (modal.size() != grid.total_modes())
        throw std::invalid_argument("field: modal size does not match grid");
}

SpectralField to_modal(const Grid& grid, const std::vector<cplx>& nodal) {
    if (nodal.size() != grid.total_modes())
        throw std::invalid_argument("to_modal: nodal size does not match grid");
    SpectralField f(grid);
    f.modal = nodal;
    dft_inplace(grid.modes(), f.modal, -1);
    const double inv = 1.0 / static_cast<double>(grid.total_modes());
    for (auto& c : f.modal) c *= inv;
    apply_phases(grid, f.modal, true);
    return f;
}

std::vector<cplx> to_nodal(const SpectralField& f) {
    std::vector<cplx> out = f.modal;
    apply_phases(f.grid, out, false);
    dft_inplace(f.grid.modes(), out, +1);
    return out;
}

cplx inner(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("inner: grid mismatch");
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < a.modal.size(); ++i)
        s += a.modal[i] * std::conj(b.modal[i]);
    return s * a.grid.volume();
}

double norm_sq(const SpectralField& f) {
    double s = 0.0;
    for (const auto& c : f.modal) s += std::norm(c);
    return s * f.grid.volume();
}

double norm(const SpectralField& f) { return std::sqrt(norm_sq(f)); }

SpectralField& axpy(SpectralField& y, cplx alpha, const SpectralField& x) {
    if (!(y.grid == x.grid)) throw std::invalid_argument("axpy: grid mismatch");
    for (std::size_t i = 0; i < y.modal.size(); ++i) y.modal[i] += alpha * x.modal[i];
    return y;
}

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
    SpectralField r = a;
    axpy(r, cplx(1.0, 0.0), b);
    return r;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
    SpectralField r = a;
    axpy(r, cplx(-1.0, 0.0), b);
    return r;
}

SpectralField operator*(cplx s, const SpectralField& a) {
    SpectralField r = a;
    for (auto& c : r.modal) c *= s;
    return r;
}

SpectralField fourier_multiplier(const SpectralField& f,
                                 const std::function<cplx(const std::vector<double>&)>& chi) {
    SpectralField out = f;
    const Grid& g = f.grid;
    std::vector<double> k(static_cast<std::size_t>(g.dim()));
    for (std::size_t flat = 0; flat < out.modal.size(); ++flat) {
        std::size_t rem = flat;
        for (int ax = g.dim() - 1; ax >= 0; --ax) {
            const auto N = static_cast<std::size_t>(g.modes()[static_cast<std::size_t>(ax)]);
            k[static_cast<std::size_t>(ax)] = g.wavenumber(ax, static_cast<int>(rem % N));
            rem /= N;
        }
        out.modal[flat] *= chi(k);
    }
    return out;
}

SpectralField isotropic_multiplier(const SpectralField& f,
                                   const std::function<cplx(double)>& chi_of_ksq) {
    SpectralField out = f;
    for (std::size_t flat = 0; flat < out.modal.size(); ++flat)
        out.modal[flat] *= chi_of_ksq(f.grid.wavenumber_sq(flat));
    return out;
}

std::vector<std::pair<std::vector<int>, SpectralField>>
partial_modes(const SpectralField& f) {
    const Grid& g = f.grid;
    if (g.n_second() < 1)
        throw std::invalid_argument("partial_modes: grid has no torus factor");
    const Grid sub = g.prime_subgrid();
    const std::size_t prime_total = sub.total_modes();
    std::size_t second_total = 1;
    for (int ax = g.n_prime(); ax < g.dim(); ++ax)
        second_total *= static_cast<std::size_t>(g.modes()[static_cast<std::size_t>(ax)]);

    std::vector<std::pair<std::vector<int>, SpectralField>> out;
    out.reserve(second_total);
    std::vector<int> kvec(static_cast<std::size_t>(g.n_second()));
    for (std::size_t ks = 0; ks < second_total; ++ks) {
        std::size_t rem = ks;
        for (int ax = g.dim() - 1; ax >= g.n_prime(); --ax) {
            const int N = g.modes()[static_cast<std::size_t>(ax)];
            kvec[static_cast<std::size_t>(ax - g.n_prime())] =
                g.mode_number(ax, static_cast<int>(rem % static_cast<std::size_t>(N)));
            rem /= static_cast<std::size_t>(N);
        }
        SpectralField slice(sub);
        for (std::size_t kp = 0; kp < prime_total; ++kp)
            slice.modal[kp] = f.modal[kp * second_total + ks];
        out.emplace_back(kvec, std::move(slice));
    }
    return out;
}

double sobolev_norm(const SpectralField& f, double s, double lambda) {
    double acc = 0.0;
    for (std::size_t flat = 0; flat < f.modal.size(); ++flat) {
        const double w = f.grid.wavenumber_sq(flat) + lambda * lambda;
        acc += std::pow(w, s) * std::norm(f.modal[flat]);
    }
    return std::sqrt(acc * f.grid.volume());
}

NodalCoefficient sample_coefficient(const Grid& grid,
                                    const std::function<double(const std::vector<double>&)>& c) {
    NodalCoefficient nc{grid.padded(), {}};
    const Grid& fg = nc.fine;
    nc.values.resize(fg.total_modes());
    std::vector<double> x(static_cast<std::size_t>(fg.dim()));
    for (std::size_t flat = 0; flat < nc.values.size(); ++flat) {
        std::size_t rem = flat;
        for (int ax = fg.dim() - 1; ax >= 0; --ax) {
            const auto N = static_cast<std::size_t>(fg.modes()[static_cast<std::size_t>(ax)]);
            x[static_cast<std::size_t>(ax)] = fg.coord(ax, static_cast<int>(rem % N));
            rem /= N;
        }
        nc.values[flat] = c(x);
    }
    return nc;
}

namespace {

// Map a coarse modal flat index to the fine-grid flat index of the same
// wavenumber. Wavenumber sets nest because lengths agree.
std::size_t fine_index(const Grid& coarse, const Grid& fine, std::size_t flat) {
    std::size_t out = 0;
    std::size_t rem = flat;
    for (int ax = coarse.dim() - 1; ax >= 0; --ax) {
        const int Nc = coarse.modes()[static_cast<std::size_t>(ax)];
        const int Nf = fine.modes()[static_cast<std::size_t>(ax)];
        const int m = static_cast<int>(rem % static_cast<std::size_t>(Nc));
        rem /= static_cast<std::size_t>(Nc);
        const int s = m <= Nc / 2 - 1 ? m : m - Nc;
        const int mf = s >= 0 ? s : s + Nf;
        std::size_t stride = 1;
        for (int a2 = ax + 1; a2 < coarse.dim(); ++a2)
            stride *= static_cast<std::size_t>(fine.modes()[static_cast<std::size_t>(a2)]);
        out += static_cast<std::size_t>(mf) * stride;
    }
    return out;
}

} // namespace

std::vector<cplx> pad_modal(const SpectralField& u, const Grid& fine) {
    std::vector<cplx> out(fine.total_modes(), cplx(0.0, 0.0));
    for (std::size_t flat = 0; flat < u.modal.size(); ++flat)
        out[fine_index(u.grid, fine, flat)] = u.modal[flat];
    return out;
}

SpectralField truncate_modal(const Grid& coarse, const Grid& fine,
                             const std::vector<cplx>& fine_modal) {
    SpectralField out(coarse);
    for (std::size_t flat = 0; flat < out.modal.size(); ++flat)
        out.modal[flat] = fine_modal[fine_index(coarse, fine, flat)];
    return out;
}

SpectralField multiply_dealiased(const SpectralField& u, const NodalCoefficient& c) {
    if (!(u.grid.padded() == c.fine))
        throw std::invalid_argument("multiply_dealiased: coefficient sampled on wrong grid");
    SpectralField fine_field(c.fine, pad_modal(u, c.fine));
    std::vector<cplx> nod = to_nodal(fine_field);
    for (std::size_t i = 0; i < nod.size(); ++i) nod[i] *= c.values[i];
    SpectralField prod = to_modal(c.fine, nod);
    return truncate_modal(u.grid, c.fine, prod.modal);
}

SpectralField random_field(const Grid& grid, std::uint64_t seed) {
    SpectralField f(grid);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto& c : f.modal) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        c = cplx(re, im);
    }
    return f;
}

} // namespace declab
