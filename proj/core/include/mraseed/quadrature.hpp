// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "mraseed/lattice.hpp"

namespace mraseed::quad {

struct NodeSet {
    std::vector<double> x;
    std::vector<double> w;
};

// 20-point Gauss-Legendre nodes on [lo, hi], with panels split at every
// breakpoint inside the interval and no panel wider than max_width.
NodeSet composite_gauss(double lo, double hi, std::vector<double> breaks, double max_width);

// Same, with the node count per panel chosen from {10, 20}.
NodeSet composite_gauss(double lo, double hi, std::vector<double> breaks, double max_width,
                        int order);

struct Estimate {
    cplx value;
    double error;
};

// Adaptive 21-point Gauss-Kronrod on each panel (same panel rules as above).
// Real and imaginary parts are integrated separately; errors are summed.
Estimate adaptive(const std::function<cplx(double)>& f, double lo, double hi,
                  std::vector<double> breaks, double max_width, double rel_tol = 1e-13);

}  // namespace mraseed::quad
