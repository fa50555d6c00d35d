// SPDX-License-Identifier: Apache-2.0
#include "mraseed/pipeline.hpp"

#include <cmath>

namespace mraseed {

namespace {

int nonzero_count(const TruncatedSequence& H, double floor) {
    int k = 0;
    for (const auto& v : H.values)
        if (std::abs(v) > floor) ++k;
    return k;
}

}  // namespace

PipelineResult run_pipeline(const SeedFunction& seed, const PipelineOptions& opts) {
    CWeightsOptions copts;
    copts.pos_tol = opts.tol.pos;

    auto table = overlap_table(seed, opts.radius);
    auto series = spectral_series(table);
    auto c = c_weights(series, opts.phase, opts.s_max, copts);
    FilterOptions fopts;
    fopts.n_cap = opts.n_cap;
    auto H = filter_coefficients(seed, c, fopts);
    auto psf = psf_crosscheck(seed, table, opts.tol.psf);

    std::optional<SumRuleReport> sums;
    if (opts.with_sum_rules) sums = sum_rules(seed, table, series, c, opts.tol.sum_rules);

    auto report = assess_filter(H.coeffs, opts.tol, opts.l_max, opts.r4_grid);
    report.criterion = criterion_r3(seed, table, opts.tol.criterion);
    report.corollary = corollary_check(seed);
    report.factorization = factorization_check(H.coeffs, c, seed, series, opts.r4_grid);

    auto& notes = report.notes;
    if (table.under_truncated)
        notes.push_back("overlap table boundary exceeds the tail tolerance; widen --radius");
    if (c.tail_flag) notes.push_back("boundary c_s exceed the tail tolerance; widen --s-max");
    if (H.cap_hit) notes.push_back("filter reached --n-cap before its edge entries fell below 1e-12");
    if (nonzero_count(H.coeffs, 1e-12) == 1 && report.v3 == Verdict::Fail)
        notes.push_back("single-tap filter: sum H_n = " + std::to_string(std::abs(report.r3.sum)) +
                        ", so (r3) cannot hold although (r1) and (r4) do");
    if (report.criterion->verdict != report.v3)
        notes.push_back(std::string("criterion_r3 and the direct (r3) check disagree") +
                        (psf.passed ? "" : " (PSF cross-check did not pass)"));

    return {seed,           std::move(table), std::move(series), std::move(c),
            std::move(H),   std::move(psf),   std::move(sums),   std::move(report)};
}

}  // namespace mraseed
