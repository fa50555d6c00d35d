// SPDX-License-Identifier: Apache-2.0
#include "mraseed/overlap.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "mraseed/errors.hpp"
#include "mraseed/parallel.hpp"
#include "mraseed/quadrature.hpp"

namespace mraseed {

cplx OverlapTable::at(int l1, int l2) const {
    if (std::abs(l1) > radius || std::abs(l2) > radius) return {};
    return values[static_cast<std::size_t>((l1 + radius) * width() + (l2 + radius))];
}

cplx& OverlapTable::at(int l1, int l2) {
    return values[static_cast<std::size_t>((l1 + radius) * width() + (l2 + radius))];
}

cplx OverlapTable::total() const {
    cplx s{};
    for (const auto& v : values) s += v;
    return s;
}

cplx SpectralSeries::T(int r) const {
    if (std::abs(r) > radius) return {};
    return coeffs[static_cast<std::size_t>(r + radius)];
}

double SpectralSeries::operator()(double p) const {
    double s = 0.0;
    for (int r = -radius; r <= radius; ++r) {
        const cplx t = coeffs[static_cast<std::size_t>(r + radius)];
        s += t.real() * std::cos(p * r) - t.imag() * std::sin(p * r);
    }
    return s;
}

namespace {

constexpr double kA = kLatticeA;
constexpr double kMaxExtent = 1e6;

struct Domain {
    double lo = 0.0;
    double hi = 0.0;
    bool empty() const { return !(hi > lo); }
};

// Region where env(t) env(t - shift) (1 + |t - centre|) >= eps, i.e. where the
// integrand or its tail can still contribute at the eps level.
std::optional<Domain> product_domain(const SeedFunction& seed, Side side, double shift,
                                     double eps) {
    const Interval c = seed.core(side);
    if (seed.compact(side)) {
        Domain d{std::max(c.lo, c.lo + shift), std::min(c.hi, c.hi + shift)};
        if (d.empty()) return Domain{};
        return d;
    }
    const double centre = 0.5 * (c.lo + c.hi) + 0.5 * shift;
    auto weight = [&](double t) {
        return seed.envelope(side, t) * seed.envelope(side, t - shift) * (1.0 + std::abs(t - centre));
    };
    auto expand = [&](double start, double dir) -> std::optional<double> {
        double inside = start, step = 1.0;
        double t = start;
        while (weight(t) >= eps) {
            inside = t;
            t += dir * step;
            step *= 2.0;
            if (std::abs(t) > kMaxExtent) return std::nullopt;
        }
        // Bisect between the last point above eps and the first below.
        double out = t;
        for (int i = 0; i < 60 && std::abs(out - inside) > 1e-3; ++i) {
            const double mid = 0.5 * (inside + out);
            (weight(mid) >= eps ? inside : out) = mid;
        }
        return out;
    };
    const double lo0 = std::min(c.lo, c.lo + shift), hi0 = std::max(c.hi, c.hi + shift);
    auto lo = expand(lo0, -1.0);
    auto hi = expand(hi0, +1.0);
    if (!lo || !hi) return std::nullopt;
    Domain d{*lo, *hi};
    // Drop the row when the product never reaches eps anywhere in the domain.
    double peak = 0.0;
    const double step = std::min(0.25, (d.hi - d.lo) / 64.0);
    for (double t = d.lo; t <= d.hi; t += step) peak = std::max(peak, weight(t));
    if (peak * (d.hi - d.lo) < eps) return Domain{};
    return d;
}

cplx value(const SeedFunction& seed, Side side, double t) {
    return side == Side::Position ? seed.h(t) : seed.h_hat(t);
}

std::vector<double> shifted_breaks(const SeedFunction& seed, Side side, double shift) {
    auto b = seed.breaks(side);
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i) b.push_back(b[i] + shift);
    return b;
}

// Shift and frequency step of the row integral for the chosen representation.
// Position rows: fixed l1, shift l1 a, frequency -2 a l2.
// Momentum rows: fixed l2, shift 2 a l2, frequency a l1.
struct RowGeometry {
    double shift_per_index;
    double freq_per_index;
};

RowGeometry geometry(Side side) {
    return side == Side::Position ? RowGeometry{kA, -2.0 * kA} : RowGeometry{2.0 * kA, kA};
}

}  // namespace

cplx overlap_coefficient(const SeedFunction& seed, int l1, int l2) {
    return overlap_coefficient(seed, l1, l2, seed.preferred_side());
}

cplx overlap_coefficient(const SeedFunction& seed, int l1, int l2, Side side) {
    const RowGeometry g = geometry(side);
    const int row = side == Side::Position ? l1 : l2;
    const int col = side == Side::Position ? l2 : l1;
    const double shift = g.shift_per_index * row;
    const double omega = g.freq_per_index * col;
    const auto dom = product_domain(seed, side, shift, 1e-17);
    if (!dom)
        throw ConfigError("overlap: " + to_string(side) + " side of " + seed.descriptor() +
                          " decays too slowly for direct integration");
    if (dom->empty()) return {};
    double width = seed.resolution(side);
    if (omega != 0.0) width = std::min(width, kTwoPi / std::abs(omega));
    width = std::min(width, std::max(1.0, (dom->hi - dom->lo) / 8.0));
    auto f = [&](double t) {
        return std::polar(1.0, omega * t) * std::conj(value(seed, side, t - shift)) *
               value(seed, side, t);
    };
    const auto est = quad::adaptive(f, dom->lo, dom->hi, shifted_breaks(seed, side, shift), width);
    if (est.error > 1e-10)
        throw IntegrationError("overlap: quadrature did not reach 1e-10 for (" + std::to_string(l1) +
                                   "," + std::to_string(l2) + ")",
                               est.error);
    return est.value;
}

OverlapTable overlap_table(const SeedFunction& seed, int radius, const OverlapOptions& opts) {
    return overlap_table(seed, radius, seed.preferred_side(), opts);
}

OverlapTable overlap_table(const SeedFunction& seed, int radius, Side side,
                           const OverlapOptions& opts) {
    if (radius < 1) throw ConfigError("overlap_table: radius must be >= 1");
    OverlapTable table;
    table.radius = radius;
    table.representation = side;
    const int W = table.width();
    table.values.assign(static_cast<std::size_t>(W) * W, cplx{});

    const RowGeometry g = geometry(side);
    const double omega_max = std::abs(g.freq_per_index) * radius;
    const int order = seed.family() == SeedFamily::Tabulated ? 10 : 20;

    std::vector<std::vector<cplx>> rows(static_cast<std::size_t>(W));
    parallel_for(static_cast<std::size_t>(W), [&](std::size_t idx) {
        const int row = static_cast<int>(idx) - radius;
        const double shift = g.shift_per_index * row;
        std::vector<cplx> acc(static_cast<std::size_t>(W), cplx{});
        const auto dom = product_domain(seed, side, shift, opts.envelope_eps);
        if (!dom)
            throw ConfigError("overlap: " + to_string(side) + " side of " + seed.descriptor() +
                              " decays too slowly for direct integration");
        if (!dom->empty()) {
            const double width = std::min(seed.resolution(side), kTwoPi / omega_max);
            const auto nodes = quad::composite_gauss(dom->lo, dom->hi,
                                                     shifted_breaks(seed, side, shift), width, order);
            for (std::size_t k = 0; k < nodes.x.size(); ++k) {
                const double t = nodes.x[k];
                const cplx z = nodes.w[k] * std::conj(value(seed, side, t - shift)) * value(seed, side, t);
                if (z == cplx{}) continue;
                acc[static_cast<std::size_t>(radius)] += z;
                const cplx base = std::polar(1.0, g.freq_per_index * t);
                cplx p{1.0, 0.0};
                for (int c = 1; c <= radius; ++c) {
                    p *= base;
                    acc[static_cast<std::size_t>(radius + c)] += z * p;
                    acc[static_cast<std::size_t>(radius - c)] += z * std::conj(p);
                }
            }
        }
        rows[idx] = std::move(acc);
    });

    for (int r = -radius; r <= radius; ++r)
        for (int c = -radius; c <= radius; ++c) {
            const cplx v = rows[static_cast<std::size_t>(r + radius)][static_cast<std::size_t>(c + radius)];
            if (side == Side::Position)
                table.at(r, c) = v;
            else
                table.at(c, r) = v;
        }

    double tail = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        tail = std::max({tail, std::abs(table.at(radius, i)), std::abs(table.at(-radius, i)),
                         std::abs(table.at(i, radius)), std::abs(table.at(i, -radius))});
    }
    table.tail_bound = tail;
    table.under_truncated = tail > opts.table_tail_tol;
    return table;
}

SpectralSeries spectral_series(const OverlapTable& table, const SeriesOptions& opts) {
    SpectralSeries s;
    s.radius = table.radius;
    s.coeffs.assign(static_cast<std::size_t>(table.width()), cplx{});
    for (int r = -table.radius; r <= table.radius; ++r) {
        cplx t{};
        for (int l1 = -table.radius; l1 <= table.radius; ++l1) t += table.at(l1, r);
        s.coeffs[static_cast<std::size_t>(r + table.radius)] = t;
    }

    const std::size_t n = std::max<std::size_t>(opts.grid, 16);
    const double h = kTwoPi / static_cast<double>(n);
    std::size_t best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        const double v = s(h * static_cast<double>(j));
        if (v < best_value) {
            best_value = v;
            best = j;
        }
    }
    const double centre = h * static_cast<double>(best);
    const auto [x, fx] = boost::math::tools::brent_find_minima(
        [&](double p) { return s(p); }, centre - h, centre + h, std::numeric_limits<double>::digits);
    double loc = x, val = fx;
    if (best_value < val) {
        loc = centre;
        val = best_value;
    }
    loc = std::fmod(loc, kTwoPi);
    if (loc < 0.0) loc += kTwoPi;
    s.min_value = val;
    s.min_location = loc;
    return s;
}

PsfReport psf_crosscheck(const SeedFunction& seed, const OverlapTable& table, double tol) {
    PsfReport rep;
    rep.tolerance = tol;
    const int R = table.radius;

    const long N = seed.sample_radius(Side::Momentum);
    const long pad = 2L * R;
    std::vector<cplx> hh(static_cast<std::size_t>(2 * (N + pad) + 1));
    for (long n = -N - pad; n <= N + pad; ++n)
        hh[static_cast<std::size_t>(n + N + pad)] = seed.lattice_sample(n);
    auto hat = [&](long n) { return hh[static_cast<std::size_t>(n + N + pad)]; };
    rep.momentum_samples = N;
    for (int r2 = -R; r2 <= R; ++r2) {
        cplx lhs{};
        for (int l1 = -R; l1 <= R; ++l1) lhs += table.at(l1, r2);
        cplx rhs{};
        for (long r1 = -N; r1 <= N; ++r1) rhs += hat(r1) * std::conj(hat(r1 - 2L * r2));
        rhs *= kA;
        rep.momentum_rows.push_back({r2, lhs, rhs, std::abs(lhs - rhs)});
    }

    const long M = seed.sample_radius(Side::Position);
    std::vector<cplx> hx(static_cast<std::size_t>(2 * (M + pad) + 1));
    parallel_for(hx.size(), [&](std::size_t i) {
        hx[i] = seed.half_lattice_sample(static_cast<long>(i) - M - pad);
    });
    auto pos = [&](long m) { return hx[static_cast<std::size_t>(m + M + pad)]; };
    rep.position_samples = M;
    for (int r1 = -R; r1 <= R; ++r1) {
        cplx lhs{};
        for (int l2 = -R; l2 <= R; ++l2) lhs += table.at(r1, l2);
        cplx rhs{};
        for (long m = -M; m <= M; ++m) rhs += pos(m) * std::conj(pos(m - 2L * r1));
        rhs *= 0.5 * kA;
        rep.position_columns.push_back({r1, lhs, rhs, std::abs(lhs - rhs)});
    }

    for (const auto& l : rep.momentum_rows) rep.max_diff = std::max(rep.max_diff, l.diff);
    for (const auto& l : rep.position_columns) rep.max_diff = std::max(rep.max_diff, l.diff);
    rep.passed = rep.max_diff <= tol;
    return rep;
}

}  // namespace mraseed
