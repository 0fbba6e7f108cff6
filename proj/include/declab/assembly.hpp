#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <optional>

#include "declab/operators.hpp"

namespace declab {

using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;
using SpMatC = Eigen::SparseMatrix<cplx>;

// Modal convolution kernel of the potential: beta such that multiplication by
// the (dealiased) potential acts on coefficients as (T u)_k = sum_l
// beta[wrap(k-l)] u_l with fine-grid wrapping. Equals to_modal of the padded
// nodal samples.
std::vector<cplx> modal_kernel(const OperatorSpec& spec);

// Dense modal matrix of the discrete operator; identical action to apply() up
// to round-off.
MatC assemble_dense(const OperatorSpec& spec);

// Sparse modal matrix for 1-D periodic grids whose potential is a
// trigonometric polynomial (integer-gamma periodic-power damping, optionally
// floored). nullopt when the structure is absent.
std::optional<SpMatC> assemble_banded(const OperatorSpec& spec);

} // namespace declab
