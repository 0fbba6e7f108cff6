#include "declab/assembly.hpp"

#include <vector>

namespace declab {

std::vector<cplx> modal_kernel(const OperatorSpec& spec) {
    const NodalCoefficient& c = *spec.coeff;
    std::vector<cplx> nodal(c.values.size());
    for (std::size_t i = 0; i < nodal.size(); ++i) nodal[i] = cplx(c.values[i], 0.0);
    return to_modal(c.fine, nodal).modal;
}

MatC assemble_dense(const OperatorSpec& spec) {
    const Grid& g = spec.grid;
    const Grid& fg = spec.coeff->fine;
    const auto n = static_cast<Eigen::Index>(g.total_modes());
    const std::vector<cplx> beta = modal_kernel(spec);
    const cplx ic(0.0, spec.imag_coef());
    const double shift = spec.shift();

    // Per-axis signed mode numbers for every flat index, plus fine-grid strides.
    const int dim = g.dim();
    std::vector<std::vector<int>> smode(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(dim)));
    std::vector<int> idx;
    for (Eigen::Index r = 0; r < n; ++r) {
        g.unflatten(static_cast<std::size_t>(r), idx);
        for (int ax = 0; ax < dim; ++ax)
            smode[static_cast<std::size_t>(r)][static_cast<std::size_t>(ax)] =
                g.mode_number(ax, idx[static_cast<std::size_t>(ax)]);
    }
    std::vector<std::size_t> fstride(static_cast<std::size_t>(dim), 1);
    for (int ax = dim - 2; ax >= 0; --ax)
        fstride[static_cast<std::size_t>(ax)] =
            fstride[static_cast<std::size_t>(ax + 1)] *
            static_cast<std::size_t>(fg.modes()[static_cast<std::size_t>(ax + 1)]);

    MatC A(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            std::size_t kflat = 0;
            for (int ax = 0; ax < dim; ++ax) {
                const int M = fg.modes()[static_cast<std::size_t>(ax)];
                int d = smode[static_cast<std::size_t>(r)][static_cast<std::size_t>(ax)] -
                        smode[static_cast<std::size_t>(c)][static_cast<std::size_t>(ax)];
                if (d < 0) d += M;
                kflat += static_cast<std::size_t>(d) * fstride[static_cast<std::size_t>(ax)];
            }
            A(r, c) = ic * beta[kflat];
        }
        A(r, r) += g.wavenumber_sq(static_cast<std::size_t>(r)) - shift;
    }
    return A;
}

std::optional<SpMatC> assemble_banded(const OperatorSpec& spec) {
    const Grid& g = spec.grid;
    if (g.dim() != 1 || g.kinds()[0] != AxisKind::periodic) return std::nullopt;
    const auto bw = modal_bandwidth(spec.damping);
    if (!bw) return std::nullopt;
    const bool box_family =
        spec.family == OperatorFamily::q0 || spec.family == OperatorFamily::p_tilde;
    if (box_family) return std::nullopt;

    const int N = g.modes()[0];
    const int M = spec.coeff->fine.modes()[0];
    const std::vector<cplx> beta = modal_kernel(spec);
    const cplx ic(0.0, spec.imag_coef());
    const double shift = spec.shift();
    const int gbw = *bw;

    std::vector<Eigen::Triplet<cplx>> trips;
    trips.reserve(static_cast<std::size_t>(N) * static_cast<std::size_t>(2 * gbw + 1));
    for (int r = 0; r < N; ++r) {
        const int sr = g.mode_number(0, r);
        for (int d = -gbw; d <= gbw; ++d) {
            const int sc = sr - d;
            if (sc < -N / 2 || sc > N / 2 - 1) continue;
            const int c = sc >= 0 ? sc : sc + N;
            cplx v = ic * beta[static_cast<std::size_t>(d >= 0 ? d : d + M)];
            if (c == r) v += g.wavenumber_sq(static_cast<std::size_t>(r)) - shift;
            trips.emplace_back(r, c, v);
        }
    }
    SpMatC A(N, N);
    A.setFromTriplets(trips.begin(), trips.end());
    A.makeCompressed();
    return A;
}

} // namespace declab
