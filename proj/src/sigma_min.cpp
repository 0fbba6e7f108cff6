#include "declab/sigma_min.hpp"

#include <Eigen/SVD>
#include <Eigen/SparseLU>
#include <cmath>
#include <memory>

namespace declab {

namespace {

struct Factorization {
    virtual ~Factorization() = default;
    virtual VecC solve(const VecC& b) const = 0;         // A x = b
    virtual VecC solve_adjoint(const VecC& b) const = 0; // A* x = b
    virtual VecC multiply(const VecC& x) const = 0;      // A x
};

// Dense LU of A; adjoint systems reuse the same factors. Eigen's partial-piv
// decomposition is A = P^{-1} L U, so A* = U* L* P and the adjoint solve runs
// the two triangular solves conjugate-transposed followed by P^{-1}.
struct DenseFactor final : Factorization {
    MatC A;
    Eigen::PartialPivLU<MatC> lu;

    explicit DenseFactor(MatC m) : A(std::move(m)), lu(A) {}

    VecC solve(const VecC& b) const override { return lu.solve(b); }

    VecC solve_adjoint(const VecC& b) const override {
        const auto& LU = lu.matrixLU();
        VecC y = LU.triangularView<Eigen::Upper>().adjoint().solve(b);
        LU.triangularView<Eigen::UnitLower>().adjoint().solveInPlace(y);
        return lu.permutationP().inverse() * y;
    }

    VecC multiply(const VecC& x) const override { return A * x; }
};

struct SparseFactor final : Factorization {
    SpMatC A;
    SpMatC Aadj;
    Eigen::SparseLU<SpMatC> lu;
    Eigen::SparseLU<SpMatC> lu_adj;

    explicit SparseFactor(SpMatC m) : A(std::move(m)) {
        Aadj = A.adjoint();
        lu.compute(A);
        lu_adj.compute(Aadj);
        if (lu.info() != Eigen::Success || lu_adj.info() != Eigen::Success)
            throw std::runtime_error("sigma_min: sparse factorization failed");
    }

    VecC solve(const VecC& b) const override { return lu.solve(b); }
    VecC solve_adjoint(const VecC& b) const override { return lu_adj.solve(b); }
    VecC multiply(const VecC& x) const override { return A * x; }
};

std::unique_ptr<Factorization> factorize(const OperatorSpec& spec) {
    if (auto banded = assemble_banded(spec))
        return std::make_unique<SparseFactor>(std::move(*banded));
    return std::make_unique<DenseFactor>(assemble_dense(spec));
}

} // namespace

SigmaMinResult sigma_min(const OperatorSpec& spec, const SigmaMinOptions& opts) {
    if (!(opts.tol > 0.0) || opts.tol > 1e-2)
        throw std::invalid_argument("sigma_min: tol must lie in (0, 1e-2]");
    const auto fac = factorize(spec);
    const auto n = static_cast<Eigen::Index>(spec.grid.total_modes());

    VecC z = VecC::Ones(n);
    z /= z.norm();
    SigmaMinResult res;
    double sigma_prev = -1.0;
    for (int it = 1; it <= opts.max_iter; ++it) {
        VecC w = fac->solve(fac->solve_adjoint(z));
        const double wn = w.norm();
        if (!std::isfinite(wn) || wn == 0.0) {
            res.iterations = it;
            return res; // not converged
        }
        z = w / wn;
        const double sigma = fac->multiply(z).norm();
        res.iterations = it;
        if (sigma_prev >= 0.0 && std::abs(sigma - sigma_prev) <= opts.tol * sigma) {
            res.sigma = sigma;
            res.converged = true;
            return res;
        }
        sigma_prev = sigma;
    }
    res.sigma = sigma_prev;
    res.converged = false;
    return res;
}

double sigma_min_svd(const OperatorSpec& spec) {
    MatC A = assemble_dense(spec);
    Eigen::BDCSVD<MatC> svd(A);
    return svd.singularValues().tail(1)(0);
}

} // namespace declab
