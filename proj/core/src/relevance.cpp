// SPDX-License-Identifier: Apache-2.0
#include "mraseed/relevance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mraseed/errors.hpp"
#include "mraseed/fourier.hpp"

namespace mraseed {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Undetermined: return "undetermined";
    }
    return "undetermined";
}

std::map<int, double> check_r1(const TruncatedSequence& H, int l_max) {
    if (l_max < 0) throw ConfigError("check_r1: l_max must be >= 0");
    std::map<int, double> out;
    for (int l = -l_max; l <= l_max; ++l) {
        cplx acc{};
        for (long n = H.first(); n <= H.last(); ++n) acc += H.at(n) * std::conj(H.at(n + 2L * l));
        out[l] = std::abs(acc - (l == 0 ? cplx{1.0} : cplx{}));
    }
    return out;
}

R2Result check_r2(const TruncatedSequence& H) {
    R2Result r;
    r.decay = classify_decay(H);
    switch (r.decay.kind) {
        case DecayKind::FiniteSupport:
        case DecayKind::Superpolynomial: r.verdict = Verdict::Pass; break;
        case DecayKind::Polynomial:
            r.verdict = r.decay.exponent >= 1.9 ? Verdict::Pass : Verdict::Fail;
            break;
        case DecayKind::Undetermined: r.verdict = Verdict::Undetermined; break;
    }
    r.insufficient_tail = H.tail == TailFlag::Cap && r.decay.kind == DecayKind::Undetermined;
    return r;
}

R3Result check_r3(const TruncatedSequence& H, double tol) {
    cplx sum{};
    for (const auto& v : H.values) sum += v;
    const double res = std::abs(sum - std::numbers::sqrt2);
    return {sum, res, res < tol ? Verdict::Pass : Verdict::Fail};
}

std::vector<cplx> symbol_on_grid(const TruncatedSequence& H, std::size_t grid_size) {
    if (grid_size < 2) throw ConfigError("symbol grid needs at least 2 points");
    const std::size_t M = 2 * (grid_size - 1);
    auto v = trig_sum_on_grid(H.values, H.offset, -std::numbers::pi / 2, M, grid_size, -1);
    for (auto& z : v) z /= std::numbers::sqrt2;
    return v;
}

R4Result check_r4(const TruncatedSequence& H, std::size_t grid_size, double tol) {
    const auto v = symbol_on_grid(H, grid_size);
    R4Result r{std::numeric_limits<double>::infinity(), 0.0, grid_size, Verdict::Fail};
    const double step = std::numbers::pi / static_cast<double>(grid_size - 1);
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double m = std::abs(v[j]);
        if (m < r.min_modulus) {
            r.min_modulus = m;
            r.argmin = -std::numbers::pi / 2 + step * static_cast<double>(j);
        }
    }
    r.verdict = r.min_modulus > tol ? Verdict::Pass : Verdict::Fail;
    return r;
}

CriterionR3Result criterion_r3(const SeedFunction& seed, const OverlapTable& table, double tol) {
    CriterionR3Result r;
    r.samples = seed.sample_radius(Side::Momentum);
    cplx lhs{};
    // Small terms first.
    for (long n = r.samples; n >= 1; --n) lhs += seed.lattice_sample(n) + seed.lattice_sample(-n);
    lhs += seed.lattice_sample(0);
    r.lhs = lhs;
    r.s_origin = table.total().real();
    r.rhs = std::sqrt(2.0 * r.s_origin / kLatticeA);
    r.residual = std::abs(r.lhs - r.rhs);
    r.verdict = r.residual < tol ? Verdict::Pass : Verdict::Fail;
    return r;
}

CorollaryResult corollary_check(const SeedFunction& seed, double tol) {
    CorollaryResult r;
    r.compact = seed.compact(Side::Momentum);
    const long N = seed.sample_radius(Side::Momentum);
    cplx even{}, odd{};
    std::vector<std::pair<long, cplx>> nonzero;
    for (long n = N; n >= -N; --n) {
        const cplx v = seed.lattice_sample(n);
        if (v == cplx{}) continue;
        ((n % 2 == 0) ? even : odd) += v;
        nonzero.emplace_back(n, v);
    }
    r.alternating_sum = even - odd;
    if (r.compact) {
        // Direct double sum over the finitely many nonzero samples.
        cplx total{}, folded{};
        for (const auto& [n, hn] : nonzero)
            for (const auto& [m, hm] : nonzero) {
                total += hn * std::conj(hm);
                if ((n - m) % 2 == 0) folded += hn * std::conj(hm);
            }
        r.double_sum = total - 2.0 * folded;
        r.identity_residual = std::abs(r.double_sum + std::norm(r.alternating_sum));
    } else {
        const cplx sum = even + odd;
        r.double_sum = sum * std::conj(sum) - 2.0 * (std::norm(even) + std::norm(odd));
    }
    r.necessary = std::abs(r.alternating_sum) <= tol ? Verdict::Pass : Verdict::Fail;
    return r;
}

FactorizationResult factorization_check(const TruncatedSequence& H, const CWeights& c,
                                        const SeedFunction& seed, const SpectralSeries& series,
                                        std::size_t grid_size, double tol) {
    if (grid_size < 2) throw ConfigError("factorization grid needs at least 2 points");
    const double pi = std::numbers::pi;
    const auto Hw = symbol_on_grid(H, grid_size);
    // K(2w) for w on [-pi/2, pi/2], i.e. K on [-pi, pi].
    auto K = trig_sum_on_grid(c.values, c.s_min, -pi, grid_size - 1, grid_size - 1, +1);
    K.push_back(K.front());
    const long N = seed.sample_radius(Side::Momentum);
    std::vector<cplx> samples(static_cast<std::size_t>(2 * N + 1));
    for (long n = -N; n <= N; ++n) samples[static_cast<std::size_t>(n + N)] = seed.lattice_sample(n);
    // Hs(-w) = sum_m hhat(m a) exp(-i w m).
    const auto Hs = trig_sum_on_grid(samples, -N, -pi / 2, 2 * (grid_size - 1), grid_size, -1);

    FactorizationResult r{0.0, 0.0, 0.0, std::numeric_limits<double>::infinity(), grid_size, false};
    const double pref = std::sqrt(kLatticeA / 2.0);
    const bool quadratic = c.phase.kind == PhaseKind::Quadratic;
    for (std::size_t j = 0; j < grid_size; ++j) {
        r.product_residual = std::max(r.product_residual, std::abs(Hw[j] - pref * K[j] * Hs[j]));
        r.k_imag_max = std::max(r.k_imag_max, std::abs(K[j].imag()));
        r.k_min_real = std::min(r.k_min_real, K[j].real());
        if (!quadratic) {
            const double nu = -pi + 2.0 * pi * static_cast<double>(j) / static_cast<double>(grid_size - 1);
            const double phi = c.phase.kind == PhaseKind::Linear ? static_cast<double>(c.phase.K0) * nu : 0.0;
            const cplx expect = std::polar(1.0, phi) / std::sqrt(series(nu));
            r.k_branch_residual = std::max(r.k_branch_residual, std::abs(K[j] - expect));
        }
    }
    if (quadratic) r.k_branch_residual = std::numeric_limits<double>::quiet_NaN();
    r.passed = r.product_residual <= tol && (quadratic || r.k_branch_residual <= tol) &&
               (c.phase.kind != PhaseKind::Zero || r.k_imag_max <= tol);
    return r;
}

bool RelevanceReport::all_pass() const {
    return v1 == Verdict::Pass && v2 == Verdict::Pass && v3 == Verdict::Pass && v4 == Verdict::Pass;
}

RelevanceReport assess_filter(const TruncatedSequence& H, const Tolerances& tol, int l_max,
                              std::size_t r4_grid) {
    RelevanceReport rep;
    rep.tol = tol;
    rep.l_max = l_max;
    rep.r1_residuals = check_r1(H, l_max);
    for (const auto& [l, v] : rep.r1_residuals) rep.r1_max = std::max(rep.r1_max, v);
    rep.r2 = check_r2(H);
    rep.r3 = check_r3(H, tol.r3);
    rep.r4 = check_r4(H, r4_grid, tol.r4);
    rep.v1 = rep.r1_max < tol.r1 ? Verdict::Pass : Verdict::Fail;
    rep.v2 = rep.r2.verdict;
    rep.v3 = rep.r3.verdict;
    rep.v4 = rep.r4.verdict;
    if (rep.r2.insufficient_tail)
        rep.notes.push_back("filter truncated at the cap before its decay could be measured");
    return rep;
}

}  // namespace mraseed
