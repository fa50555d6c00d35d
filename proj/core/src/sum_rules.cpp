// SPDX-License-Identifier: Apache-2.0
#include "mraseed/sum_rules.hpp"

#include <algorithm>
#include <cmath>

namespace mraseed {

bool SumRuleReport::all_pass() const {
    return std::all_of(rules.begin(), rules.end(), [](const SumRule& r) { return r.passed; });
}

namespace {

SumRule make_rule(std::string name, cplx lhs, cplx rhs, double tol, std::string note = {}) {
    const double res = std::abs(lhs - rhs);
    return {std::move(name), lhs, rhs, res, res <= tol, std::move(note)};
}

SumRule worst_line(std::string name, const std::vector<PsfLine>& lines, double tol) {
    const auto it = std::max_element(lines.begin(), lines.end(),
                                     [](const PsfLine& x, const PsfLine& y) { return x.diff < y.diff; });
    if (it == lines.end()) return make_rule(std::move(name), {}, {}, tol);
    return make_rule(std::move(name), it->lhs, it->rhs, tol, "index " + std::to_string(it->index));
}

// Whether the function on `side` jumps at a multiple of `step`.
bool jumps_on_lattice(const SeedFunction& seed, Side side, double step) {
    if (!seed.compact(side)) return false;
    for (double b : seed.breaks(side)) {
        const double k = b / step;
        if (std::abs(k - std::round(k)) < 1e-12) return true;
    }
    return false;
}

constexpr const char* kMidpointNote =
    "the dual side jumps at lattice points, so these samples sum to midpoint values";

}  // namespace

SumRuleReport sum_rules(const SeedFunction& seed, const OverlapTable& table,
                        const SpectralSeries& series, const CWeights& c, double tol) {
    SumRuleReport rep;
    rep.tolerance = tol;
    rep.slow_tail = table.under_truncated || c.tail_flag;

    const auto psf = psf_crosscheck(seed, table, tol);
    rep.rules.push_back(worst_line("row_psf", psf.momentum_rows, tol));
    rep.rules.push_back(worst_line("column_psf", psf.position_columns, tol));

    const cplx total = table.total();
    double even = 0.0, odd = 0.0;
    {
        cplx e{}, o{};
        const long N = seed.sample_radius(Side::Momentum);
        for (long n = N; n >= -N; --n) ((n % 2 == 0) ? e : o) += seed.lattice_sample(n);
        even = std::norm(e);
        odd = std::norm(o);
    }
    rep.rules.push_back(make_rule("total_momentum", total, kLatticeA * (even + odd), tol));
    if (!rep.rules.back().passed && jumps_on_lattice(seed, Side::Position, 0.5 * kLatticeA))
        rep.rules.back().note = kMidpointNote;
    {
        cplx e{}, o{};
        const long M = seed.sample_radius(Side::Position);
        for (long m = M; m >= -M; --m) ((m % 2 == 0) ? e : o) += seed.half_lattice_sample(m);
        rep.rules.push_back(
            make_rule("total_position", total, 0.5 * kLatticeA * (std::norm(e) + std::norm(o)), tol));
        if (!rep.rules.back().passed && jumps_on_lattice(seed, Side::Momentum, kLatticeA))
            rep.rules.back().note = kMidpointNote;
    }

    // Parseval: sum |c_s|^2 = (1/2 pi) int 1/S(0,p) dp (trapezoid, spectrally accurate).
    double norm_c = 0.0;
    for (const auto& v : c.values) norm_c += std::norm(v);
    constexpr std::size_t kPoints = 16384;
    double mean_inv = 0.0;
    for (std::size_t j = 0; j < kPoints; ++j)
        mean_inv += 1.0 / series(kTwoPi * static_cast<double>(j) / kPoints);
    mean_inv /= kPoints;
    rep.rules.push_back(make_rule("c_norm", norm_c, mean_inv, tol));

    cplx sum_c{};
    for (const auto& v : c.values) sum_c += v;
    const double inv_root = 1.0 / std::sqrt(total.real());
    if (c.phase.kind == PhaseKind::Quadratic) {
        // The phase jumps at p = 0, so the series converges to the midpoint.
        const cplx mid = 0.5 * (1.0 + std::polar(1.0, c.phase.gamma * kTwoPi * kTwoPi));
        rep.rules.push_back(make_rule("c_sum", sum_c, mid * inv_root, tol,
                                      "midpoint of the phase jump at p = 0"));
    } else {
        rep.rules.push_back(make_rule("c_sum", sum_c, inv_root, tol));
    }
    return rep;
}

}  // namespace mraseed
