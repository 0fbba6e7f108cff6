#pragma once

#include <complex>
#include <vector>

namespace declab {

using cplx = std::complex<double>;

// Unnormalized multidimensional DFT on row-major data.
// sign = -1 : forward  sum_j u_j e^{-2*pi*i*j*k/N}
// sign = +1 : backward sum_k c_k e^{+2*pi*i*j*k/N}
// Plans are cached per (dims, sign) and execution is thread-safe for
// distinct in/out buffers.
void dft(const std::vector<int>& dims, const cplx* in, cplx* out, int sign);

void dft_inplace(const std::vector<int>& dims, std::vector<cplx>& data, int sign);

} // namespace declab
