// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "mraseed/overlap.hpp"
#include "mraseed/seed.hpp"
#include "mraseed/synthesis.hpp"

namespace mraseed {

struct SumRule {
    std::string name;
    cplx lhs;
    cplx rhs;
    double residual;
    bool passed;
    std::string note;
};

struct SumRuleReport {
    std::vector<SumRule> rules;
    double tolerance = 1e-6;
    bool slow_tail = false;

    bool all_pass() const;
};

// Row and column lattice sums, the total sum by three routes, the Parseval
// identity for c_s and the sum of c_s against 1/sqrt(S(0)).
SumRuleReport sum_rules(const SeedFunction& seed, const OverlapTable& table,
                        const SpectralSeries& series, const CWeights& c, double tol = 1e-6);

}  // namespace mraseed
