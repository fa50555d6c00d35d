// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "mraseed/overlap.hpp"
#include "mraseed/relevance.hpp"
#include "mraseed/seed.hpp"
#include "mraseed/sum_rules.hpp"
#include "mraseed/synthesis.hpp"

namespace mraseed {

struct PipelineOptions {
    int radius = 8;
    long s_max = 0;  // 0: automatic
    long n_cap = 512;
    PhaseSpec phase;
    Tolerances tol;
    int l_max = 5;
    std::size_t r4_grid = 4097;
    bool with_sum_rules = true;
};

struct PipelineResult {
    SeedFunction seed;
    OverlapTable table;
    SpectralSeries series;
    CWeights c;
    FilterSequence H;
    PsfReport psf;
    std::optional<SumRuleReport> sums;
    RelevanceReport report;
};

// Table -> series -> c_s -> H_n -> relevance report. Throws PositivityError
// when the series is not strictly positive.
PipelineResult run_pipeline(const SeedFunction& seed, const PipelineOptions& opts = {});

}  // namespace mraseed
