// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "mraseed/lattice.hpp"

namespace mraseed {

// Unnormalized DFT: out_k = sum_j in_j exp(sign * 2 pi i j k / N), sign = -1 or +1.
std::vector<cplx> dft(const std::vector<cplx>& in, int sign);

// Row-major n0 x n1 unnormalized 2D DFT with the same sign convention.
std::vector<cplx> dft2(const std::vector<cplx>& in, std::size_t n0, std::size_t n1, int sign);

// Evaluates sum_n x_n exp(sign * i * w_j * n) at w_j = w0 + 2 pi j / M, j < count,
// for the sequence stored from index `offset`. Indices are folded modulo M and
// a single length-M DFT is used, so the cost does not grow with the grid.
std::vector<cplx> trig_sum_on_grid(const std::vector<cplx>& x, long offset, double w0,
                                   std::size_t M, std::size_t count, int sign);

}  // namespace mraseed
