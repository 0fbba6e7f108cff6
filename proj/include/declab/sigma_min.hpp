#pragma once

#include "declab/assembly.hpp"
#include "declab/operators.hpp"

namespace declab {

struct SigmaMinOptions {
    double tol = 1e-6;
    int max_iter = 100;
};

struct SigmaMinResult {
    double sigma = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Smallest singular value of the discretized operator: inverse iteration on
// the normal operator A*A behind a direct factorization (sparse for banded
// modal structure, dense otherwise). Deterministic all-ones modal start.
// Throws on non-convergence only if opts.max_iter is exhausted AND the caller
// asked for it via require_convergence; otherwise reports the flag.
SigmaMinResult sigma_min(const OperatorSpec& spec, const SigmaMinOptions& opts = {});

// Dense SVD oracle for small grids; independent of the inverse-iteration path.
double sigma_min_svd(const OperatorSpec& spec);

} // namespace declab
