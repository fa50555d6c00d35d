// SPDX-License-Identifier: Apache-2.0
#include "mraseed/synthesis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "mraseed/errors.hpp"
#include "mraseed/fourier.hpp"
#include "mraseed/parallel.hpp"
#include "mraseed/quadrature.hpp"

namespace mraseed {

PhaseSpec PhaseSpec::linear(long K0) {
    PhaseSpec p;
    p.kind = PhaseKind::Linear;
    p.K0 = K0;
    return p;
}

PhaseSpec PhaseSpec::quadratic(double gamma) {
    if (gamma == 0.0 || !std::isfinite(gamma))
        throw ConfigError("quadratic phase needs a finite nonzero gamma");
    PhaseSpec p;
    p.kind = PhaseKind::Quadratic;
    p.gamma = gamma;
    return p;
}

std::string PhaseSpec::descriptor() const {
    switch (kind) {
        case PhaseKind::Zero: return "none";
        case PhaseKind::Linear: return "linear:" + std::to_string(K0);
        case PhaseKind::Quadratic: {
            char buf[64];
            auto [end, ec] = std::to_chars(buf, buf + sizeof buf, gamma);
            return "quadratic:" + std::string(buf, end);
        }
    }
    return "none";
}

cplx CWeights::at(long s) const noexcept {
    if (values.empty() || s < s_min || s > s_max()) return {};
    return values[static_cast<std::size_t>(s - s_min)];
}

TruncatedSequence CWeights::sequence() const { return TruncatedSequence(s_min, values); }

cplx SynthesisWeights2D::at(int l1, int l2) const {
    if (std::abs(l1) > radius || std::abs(l2) > radius) return {};
    return values[static_cast<std::size_t>((l1 + radius) * (2 * radius + 1) + (l2 + radius))];
}

namespace {

constexpr double kA = kLatticeA;
const double kSqrtA = std::sqrt(kLatticeA);

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
long ceil_div(long a, long b) { return -floor_div(-a, b); }

void require_positive(const SpectralSeries& series, double pos_tol) {
    if (series.min_value <= pos_tol) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "spectral series is not strictly positive (min %.6g at p = %.6g)",
                      series.min_value, series.min_location);
        throw PositivityError(buf, series.min_value, series.min_location);
    }
}

// Trapezoid Fourier coefficients of 1/sqrt(S(0,p)) on N points, |s| <= smax.
std::vector<cplx> trapezoid_coeffs(const SpectralSeries& series, std::size_t N, long smax,
                                   double pos_tol) {
    std::vector<cplx> t(N, cplx{});
    const long n = static_cast<long>(N);
    for (int r = -series.radius; r <= series.radius; ++r)
        t[static_cast<std::size_t>(((r % n) + n) % n)] += series.T(r);
    auto S = dft(t, +1);
    for (std::size_t j = 0; j < N; ++j) {
        const double v = S[j].real();
        if (v <= pos_tol)
            throw PositivityError("spectral series not positive on the quadrature grid", v,
                                  kTwoPi * static_cast<double>(j) / static_cast<double>(N));
        S[j] = 1.0 / std::sqrt(v);
    }
    const auto F = dft(S, -1);
    std::vector<cplx> c(static_cast<std::size_t>(2 * smax + 1));
    for (long s = -smax; s <= smax; ++s)
        c[static_cast<std::size_t>(s + smax)] =
            F[static_cast<std::size_t>(((s % n) + n) % n)] / static_cast<double>(N);
    return c;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

CWeights zero_phase(const SpectralSeries& series, long smax, const CWeightsOptions& opts) {
    CWeights cw;
    cw.s_min = -smax;
    cw.s_radius = smax;
    std::size_t N = next_pow2(std::max<std::size_t>(
        {4096, 16 * static_cast<std::size_t>(smax), 4 * static_cast<std::size_t>(2 * series.radius + 1)}));
    auto prev = trapezoid_coeffs(series, N, smax, opts.pos_tol);
    while (true) {
        const std::size_t next = 2 * N;
        if (next > opts.max_grid) break;
        auto cur = trapezoid_coeffs(series, next, smax, opts.pos_tol);
        cw.convergence = max_diff(prev, cur);
        prev = std::move(cur);
        N = next;
        if (cw.convergence <= opts.agreement) {
            cw.converged = true;
            break;
        }
    }
    cw.values = std::move(prev);
    cw.grid = N;
    return cw;
}

// Composite Gauss-Legendre on [0, 2 pi] for exp(-i p s + i gamma p^2) / sqrt(S(0,p)).
std::vector<cplx> quadratic_coeffs(const SpectralSeries& series, double gamma, std::size_t panels,
                                   long smax) {
    const auto nodes = quad::composite_gauss(0.0, kTwoPi, {}, kTwoPi / static_cast<double>(panels));
    const std::size_t W = static_cast<std::size_t>(2 * smax + 1);
    std::vector<cplx> c(W, cplx{});
    for (std::size_t k = 0; k < nodes.x.size(); ++k) {
        const double p = nodes.x[k];
        const cplx z = nodes.w[k] * std::polar(1.0, gamma * p * p) / std::sqrt(series(p)) / kTwoPi;
        const cplx base = std::polar(1.0, -p);
        cplx e{1.0, 0.0};
        c[static_cast<std::size_t>(smax)] += z;
        for (long s = 1; s <= smax; ++s) {
            e *= base;
            c[static_cast<std::size_t>(smax + s)] += z * e;
            c[static_cast<std::size_t>(smax - s)] += z * std::conj(e);
        }
    }
    return c;
}

CWeights quadratic_phase(const SpectralSeries& series, double gamma, long smax,
                         const CWeightsOptions& opts) {
    CWeights cw;
    cw.s_min = -smax;
    cw.s_radius = smax;
    std::size_t P = 64;
    auto prev = quadratic_coeffs(series, gamma, P, smax);
    while (P < (std::size_t{1} << 14)) {
        auto cur = quadratic_coeffs(series, gamma, 2 * P, smax);
        cw.convergence = max_diff(prev, cur);
        prev = std::move(cur);
        P *= 2;
        if (cw.convergence <= opts.agreement) {
            cw.converged = true;
            break;
        }
    }
    cw.values = std::move(prev);
    cw.grid = P;
    return cw;
}

CWeights c_weights_fixed(const SpectralSeries& series, const PhaseSpec& phase, long smax,
                         const CWeightsOptions& opts) {
    CWeights cw;
    switch (phase.kind) {
        case PhaseKind::Zero: cw = zero_phase(series, smax, opts); break;
        case PhaseKind::Linear:
            cw = zero_phase(series, smax, opts);
            cw.s_min += phase.K0;
            break;
        case PhaseKind::Quadratic: cw = quadratic_phase(series, phase.gamma, smax, opts); break;
    }
    cw.phase = phase;
    const double edge = std::max(std::abs(cw.values.front()), std::abs(cw.values.back()));
    cw.tail_flag = edge >= opts.c_tail_tol;
    return cw;
}

}  // namespace

CWeights c_weights(const SpectralSeries& series, const PhaseSpec& phase, long s_max,
                   const CWeightsOptions& opts) {
    require_positive(series, opts.pos_tol);
    if (s_max < 0) throw ConfigError("c_weights: s_max must be >= 0");
    if (s_max > 0) return c_weights_fixed(series, phase, s_max, opts);
    if (phase.kind == PhaseKind::Quadratic) return c_weights_fixed(series, phase, 256, opts);
    long smax = 64;
    while (true) {
        CWeights cw = c_weights_fixed(series, phase, smax, opts);
        double peak = 0.0;
        for (const auto& v : cw.values) peak = std::max(peak, std::abs(v));
        const double edge = std::max(std::abs(cw.values.front()), std::abs(cw.values.back()));
        if (edge <= 1e-13 * peak || smax >= 8192) return cw;
        smax *= 2;
    }
}

CWeights c_weights_expansion(const SpectralSeries& series, int order) {
    const double T0 = series.T(0).real();
    if (!(T0 > 0.0)) throw PositivityError("expansion needs T_0 > 0", T0, 0.0);
    CWeights cw;
    const long R = order >= 1 ? series.radius : 0;
    cw.s_min = -R;
    cw.s_radius = R;
    cw.values.assign(static_cast<std::size_t>(2 * R + 1), cplx{});
    cw.values[static_cast<std::size_t>(R)] = 1.0 / std::sqrt(T0);
    for (long r = 1; r <= R; ++r) {
        cw.values[static_cast<std::size_t>(R + r)] = -series.T(static_cast<int>(r)) / (2.0 * T0 * std::sqrt(T0));
        cw.values[static_cast<std::size_t>(R - r)] = -series.T(static_cast<int>(-r)) / (2.0 * T0 * std::sqrt(T0));
    }
    cw.converged = true;
    return cw;
}

namespace {

std::vector<cplx> f_grid_coeffs(const OverlapTable& table, std::size_t N, int radius,
                                double pos_tol) {
    const long n = static_cast<long>(N);
    std::vector<cplx> grid(N * N, cplx{});
    auto wrap = [n](long i) { return static_cast<std::size_t>(((i % n) + n) % n); };
    for (int l1 = -table.radius; l1 <= table.radius; ++l1)
        for (int l2 = -table.radius; l2 <= table.radius; ++l2)
            grid[wrap(l1) * N + wrap(l2)] += table.at(l1, l2);
    auto S = dft2(grid, N, N, +1);
    for (std::size_t j = 0; j < S.size(); ++j) {
        const double v = S[j].real();
        if (v <= pos_tol) {
            const double p1 = kTwoPi * static_cast<double>(j / N) / static_cast<double>(N);
            throw PositivityError("2D overlap series is not strictly positive", v, p1);
        }
        S[j] = 1.0 / std::sqrt(v);
    }
    const auto F = dft2(S, N, N, -1);
    const int W = 2 * radius + 1;
    std::vector<cplx> f(static_cast<std::size_t>(W) * W);
    const double norm = static_cast<double>(N) * static_cast<double>(N);
    for (int l1 = -radius; l1 <= radius; ++l1)
        for (int l2 = -radius; l2 <= radius; ++l2)
            f[static_cast<std::size_t>((l1 + radius) * W + (l2 + radius))] =
                F[wrap(l1) * N + wrap(l2)] / norm;
    return f;
}

}  // namespace

SynthesisWeights2D f_weights(const OverlapTable& table, const PhaseSpec& phase, int radius,
                             const CWeightsOptions& opts) {
    if (phase.kind == PhaseKind::Quadratic)
        throw ConfigError("f_weights: quadratic phase is not supported for 2D weights");
    if (radius < 0) throw ConfigError("f_weights: radius must be >= 0");
    const int K = phase.kind == PhaseKind::Linear ? static_cast<int>(std::abs(phase.K0)) : 0;
    const int inner = radius + K;
    std::size_t N = next_pow2(std::max<std::size_t>(
        {64, 4 * static_cast<std::size_t>(2 * table.radius + 1), 4 * static_cast<std::size_t>(2 * inner + 1)}));
    SynthesisWeights2D out;
    auto prev = f_grid_coeffs(table, N, inner, opts.pos_tol);
    while (2 * N <= 2048) {
        auto cur = f_grid_coeffs(table, 2 * N, inner, opts.pos_tol);
        out.convergence = max_diff(prev, cur);
        prev = std::move(cur);
        N *= 2;
        if (out.convergence <= opts.agreement) break;
    }
    out.radius = radius;
    out.phase = phase;
    out.grid = N;
    const int W = 2 * radius + 1, Wi = 2 * inner + 1;
    out.values.assign(static_cast<std::size_t>(W) * W, cplx{});
    const long shift = phase.kind == PhaseKind::Linear ? phase.K0 : 0;
    for (int l1 = -radius; l1 <= radius; ++l1)
        for (int l2 = -radius; l2 <= radius; ++l2) {
            const long src = l2 - shift;
            out.values[static_cast<std::size_t>((l1 + radius) * W + (l2 + radius))] =
                prev[static_cast<std::size_t>((l1 + inner) * Wi + (src + inner))];
        }
    return out;
}

namespace {

// hhat(m a) for m in [lo, hi].
TruncatedSequence sample_window(const SeedFunction& seed, long lo, long hi) {
    std::vector<cplx> v(static_cast<std::size_t>(std::max(0L, hi - lo + 1)));
    for (long m = lo; m <= hi; ++m) v[static_cast<std::size_t>(m - lo)] = seed.lattice_sample(m);
    return TruncatedSequence(lo, std::move(v));
}

std::vector<cplx> direct_filter(const SeedFunction& seed, const CWeights& c, long n_lo, long n_hi) {
    const long s_lo = c.s_min, s_hi = c.s_max();
    const auto samples = sample_window(seed, n_lo + 2 * s_lo, n_hi + 2 * s_hi);
    std::vector<long> nonzero;
    for (std::size_t i = 0; i < samples.size(); ++i)
        if (samples.values[i] != cplx{}) nonzero.push_back(samples.offset + static_cast<long>(i));
    const bool sparse = nonzero.size() * 4 < samples.size();

    std::vector<cplx> H(static_cast<std::size_t>(n_hi - n_lo + 1), cplx{});
    parallel_for(H.size(), [&](std::size_t i) {
        const long n = n_lo + static_cast<long>(i);
        cplx acc{};
        if (sparse) {
            for (long m : nonzero) {
                if (((m - n) % 2) != 0) continue;
                const long s = (m - n) / 2;
                if (s < s_lo || s > s_hi) continue;
                acc += c.values[static_cast<std::size_t>(s - s_lo)] * samples.at(m);
            }
        } else {
            for (long s = s_lo; s <= s_hi; ++s)
                acc += c.values[static_cast<std::size_t>(s - s_lo)] * samples.at(n + 2 * s);
        }
        H[i] = kSqrtA * acc;
    });
    return H;
}

FilterSequence make_filter(const SeedFunction& seed, const CWeights& c, long n_lo,
                           std::vector<cplx> values) {
    FilterSequence f;
    f.coeffs = TruncatedSequence(n_lo, std::move(values));
    f.seed = seed.descriptor();
    f.phase = c.phase.descriptor();
    f.s_min = c.s_min;
    f.s_max = c.s_max();
    return f;
}

}  // namespace

FilterSequence filter_coefficients(const SeedFunction& seed, const CWeights& c, long n_lo,
                                   long n_hi) {
    if (n_hi < n_lo) throw ConfigError("filter_coefficients: empty range");
    auto f = make_filter(seed, c, n_lo, direct_filter(seed, c, n_lo, n_hi));
    f.n_cap = std::max(std::abs(n_lo), std::abs(n_hi));
    return f;
}

FilterSequence filter_coefficients(const SeedFunction& seed, const CWeights& c,
                                   const FilterOptions& opts) {
    if (opts.n_start < 1 || opts.n_cap < 1) throw ConfigError("filter_coefficients: bad range");
    // Centre the window where c pushes the support: m = n + 2 s with m near 0.
    const long centre = -(c.s_min + c.s_max());
    long half = std::min(opts.n_start, opts.n_cap);
    while (true) {
        const long lo = centre - half, hi = centre + half;
        auto H = direct_filter(seed, c, lo, hi);
        double edge = 0.0;
        for (int k = 0; k < opts.edge_width && k < static_cast<int>(H.size()); ++k)
            edge = std::max({edge, std::abs(H[static_cast<std::size_t>(k)]),
                             std::abs(H[H.size() - 1 - static_cast<std::size_t>(k)])});
        const bool done = edge < opts.edge_tol;
        if (done || half >= opts.n_cap) {
            auto f = make_filter(seed, c, lo, std::move(H));
            f.n_cap = opts.n_cap;
            f.cap_hit = !done;
            f.coeffs.tail = done ? TailFlag::Threshold : TailFlag::Cap;
            return f;
        }
        half = std::min(2 * half, opts.n_cap);
    }
}

FilterSequence filter_via_convolution(const SeedFunction& seed, const CWeights& c, long n_lo,
                                      long n_hi) {
    if (n_hi < n_lo) throw ConfigError("filter_via_convolution: empty range");
    // cbar_t = c_{-t}, t in [-s_max, -s_min].
    std::vector<cplx> rev(c.values.rbegin(), c.values.rend());
    const TruncatedSequence cbar(-c.s_max(), std::move(rev));

    auto branch = [&](long k_lo, long k_hi, long parity) {
        // E_j = hhat((2 j + parity) a) for j in [k_lo + s_min, k_hi + s_max].
        const long j_lo = k_lo + c.s_min, j_hi = k_hi + c.s_max();
        std::vector<cplx> v(static_cast<std::size_t>(std::max(0L, j_hi - j_lo + 1)));
        for (long j = j_lo; j <= j_hi; ++j)
            v[static_cast<std::size_t>(j - j_lo)] = seed.lattice_sample(2 * j + parity);
        return convolve(cbar, TruncatedSequence(j_lo, std::move(v)));
    };
    const long ke_lo = ceil_div(n_lo, 2), ke_hi = floor_div(n_hi, 2);
    const long ko_lo = ceil_div(n_lo - 1, 2), ko_hi = floor_div(n_hi - 1, 2);
    const auto even = branch(ke_lo, ke_hi, 0);
    const auto odd = branch(ko_lo, ko_hi, 1);

    std::vector<cplx> H(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (long n = n_lo; n <= n_hi; ++n) {
        const long k = floor_div(n, 2);
        const cplx v = (n - 2 * k == 0) ? even.at(k) : odd.at(k);
        H[static_cast<std::size_t>(n - n_lo)] = kSqrtA * v;
    }
    auto f = make_filter(seed, c, n_lo, std::move(H));
    f.n_cap = std::max(std::abs(n_lo), std::abs(n_hi));
    return f;
}

FilterSequence filter_via_f(const SeedFunction& seed, const SynthesisWeights2D& f, long n_lo,
                            long n_hi) {
    if (n_hi < n_lo) throw ConfigError("filter_via_f: empty range");
    const int R = f.radius;
    std::vector<cplx> g(static_cast<std::size_t>(2 * R + 1), cplx{});
    for (int l2 = -R; l2 <= R; ++l2)
        for (int l1 = -R; l1 <= R; ++l1) g[static_cast<std::size_t>(l2 + R)] += f.at(l1, l2);
    std::vector<cplx> H(static_cast<std::size_t>(n_hi - n_lo + 1), cplx{});
    for (long n = n_lo; n <= n_hi; ++n) {
        cplx acc{};
        for (int l2 = -R; l2 <= R; ++l2)
            acc += g[static_cast<std::size_t>(l2 + R)] * seed.lattice_sample(n + 2L * l2);
        H[static_cast<std::size_t>(n - n_lo)] = kSqrtA * acc;
    }
    FilterSequence out;
    out.coeffs = TruncatedSequence(n_lo, std::move(H));
    out.seed = seed.descriptor();
    out.phase = f.phase.descriptor();
    out.n_cap = std::max(std::abs(n_lo), std::abs(n_hi));
    return out;
}

namespace {

struct Term {
    int l1;
    int l2;
    cplx f;
};

std::vector<Term> significant_terms(const SynthesisWeights2D& f, double rel = 1e-15) {
    double peak = 0.0;
    for (const auto& v : f.values) peak = std::max(peak, std::abs(v));
    std::vector<Term> out;
    for (int l1 = -f.radius; l1 <= f.radius; ++l1)
        for (int l2 = -f.radius; l2 <= f.radius; ++l2) {
            const cplx v = f.at(l1, l2);
            if (std::abs(v) > rel * peak) out.push_back({l1, l2, v});
        }
    return out;
}

cplx eval_H(const SeedFunction& seed, const std::vector<Term>& terms, double P) {
    cplx acc{};
    for (const auto& t : terms)
        acc += t.f * seed.h(P - kA * t.l1) * std::polar(1.0, -2.0 * kA * P * t.l2);
    return acc;
}

cplx eval_H_ft(const SeedFunction& seed, const std::vector<Term>& terms, double p) {
    cplx acc{};
    for (const auto& t : terms)
        acc += t.f * std::polar(1.0, -p * kA * t.l1) * seed.h_hat(p + 2.0 * kA * t.l2);
    return acc;
}

// Interval outside which |g| < level for the seed's own function on `side`.
Interval single_support(const SeedFunction& seed, Side side, double level) {
    const Interval c = seed.core(side);
    if (seed.compact(side)) return c;
    auto expand = [&](double start, double dir) {
        double t = start, step = 0.5;
        while (seed.envelope(side, t) >= level) {
            t += dir * step;
            if (std::abs(t) > 1e6)
                throw ConfigError("onc_residual: seed side decays too slowly for direct integration");
        }
        return t;
    };
    return {expand(c.lo, -1.0), expand(c.hi, +1.0)};
}

}  // namespace

cplx synthesize_H(const SeedFunction& seed, const SynthesisWeights2D& f, double P) {
    cplx acc{};
    for (int l1 = -f.radius; l1 <= f.radius; ++l1) {
        cplx inner{};
        for (int l2 = -f.radius; l2 <= f.radius; ++l2)
            inner += f.at(l1, l2) * std::polar(1.0, -2.0 * kA * P * l2);
        if (inner != cplx{}) acc += inner * seed.h(P - kA * l1);
    }
    return acc;
}

cplx synthesize_H_ft(const SeedFunction& seed, const SynthesisWeights2D& f, double p) {
    cplx acc{};
    for (int l1 = -f.radius; l1 <= f.radius; ++l1)
        for (int l2 = -f.radius; l2 <= f.radius; ++l2) {
            const cplx v = f.at(l1, l2);
            if (v != cplx{}) acc += v * std::polar(1.0, -p * kA * l1) * seed.h_hat(p + 2.0 * kA * l2);
        }
    return acc;
}

OncResult onc_residual(const SeedFunction& seed, const SynthesisWeights2D& f, int l1, int l2) {
    const Side side = seed.preferred_side();
    const auto terms = significant_terms(f);
    if (terms.empty()) throw ConfigError("onc_residual: all synthesis weights vanish");

    const Interval base = single_support(seed, side, 1e-18);
    int lo_idx = 0, hi_idx = 0, max_freq = 0;
    for (const auto& t : terms) {
        const int shift_idx = side == Side::Position ? t.l1 : -2 * t.l2;
        lo_idx = std::min(lo_idx, shift_idx);
        hi_idx = std::max(hi_idx, shift_idx);
        max_freq = std::max(max_freq, side == Side::Position ? 2 * std::abs(t.l2) : std::abs(t.l1));
    }
    // H is supported on the union of translated copies of the seed.
    const Interval support{base.lo + kA * lo_idx, base.hi + kA * hi_idx};
    const double shift = side == Side::Position ? kA * l1 : 2.0 * kA * l2;
    const double omega = side == Side::Position ? -2.0 * kA * l2 : kA * l1;
    const double lo = std::max(support.lo, support.lo + shift);
    const double hi = std::min(support.hi, support.hi + shift);
    const cplx delta = (l1 == 0 && l2 == 0) ? cplx{1.0} : cplx{};
    if (!(hi > lo)) return {cplx{}, -delta, 0.0};

    std::vector<double> br;
    for (double b : seed.breaks(side))
        for (const auto& t : terms) {
            const double off = side == Side::Position ? kA * t.l1 : -2.0 * kA * t.l2;
            br.push_back(b + off);
            br.push_back(b + off + shift);
        }
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end()), br.end());

    const double freq = kA * (2.0 * max_freq) + std::abs(omega);
    double width = std::min(seed.resolution(side), freq > 0.0 ? kTwoPi / freq : 1.0);

    auto integrate = [&](double w) {
        const auto nodes = quad::composite_gauss(lo, hi, br, w);
        std::vector<cplx> part(nodes.x.size());
        parallel_for(nodes.x.size(), [&](std::size_t k) {
            const double t = nodes.x[k];
            const cplx a = side == Side::Position ? eval_H(seed, terms, t) : eval_H_ft(seed, terms, t);
            const cplx b = side == Side::Position ? eval_H(seed, terms, t - shift)
                                                  : eval_H_ft(seed, terms, t - shift);
            part[k] = nodes.w[k] * std::polar(1.0, omega * t) * std::conj(b) * a;
        });
        cplx s{};
        for (const auto& v : part) s += v;
        return s;
    };
    const cplx coarse = integrate(width);
    const cplx fine = integrate(0.5 * width);
    const double err = std::abs(fine - coarse);
    if (err > 1e-8)
        throw IntegrationError("onc_residual: quadrature did not settle", err);
    return {fine, fine - delta, err};
}

}  // namespace mraseed
