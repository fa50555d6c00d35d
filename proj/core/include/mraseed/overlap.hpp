// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "mraseed/lattice.hpp"
#include "mraseed/seed.hpp"

namespace mraseed {

// S_{l1,l2} = int exp(-2 i l2 a x) conj(h(x - l1 a)) h(x) dx
//           = int exp(i l1 a p) conj(hhat(p - 2 l2 a)) hhat(p) dp
// for |l1|, |l2| <= radius.
struct OverlapTable {
    int radius = 0;
    std::vector<cplx> values;  // row-major in (l1, l2), each in [-radius, radius]
    double tail_bound = 0.0;   // max |S| on the boundary ring
    bool under_truncated = false;
    Side representation = Side::Position;

    int width() const noexcept { return 2 * radius + 1; }
    cplx at(int l1, int l2) const;
    cplx& at(int l1, int l2);
    cplx total() const;  // sum over all stored entries
};

// S(0, p) = sum_r T_r exp(i p r), T_r = sum_l1 S_{l1, r}.
struct SpectralSeries {
    int radius = 0;
    std::vector<cplx> coeffs;  // T_r for r in [-radius, radius]
    double min_value = 0.0;
    double min_location = 0.0;  // in [0, 2 pi)

    cplx T(int r) const;
    double operator()(double p) const;
};

struct OverlapOptions {
    double envelope_eps = 1e-17;  // integrand truncation level
    double table_tail_tol = 1e-10;
};

// Single entry by adaptive Gauss-Kronrod in the seed's preferred representation.
cplx overlap_coefficient(const SeedFunction& seed, int l1, int l2);
// Same, in an explicit representation. Throws ConfigError when that side decays
// too slowly to be integrated to 1e-8 (e.g. the position side of a momentum box).
cplx overlap_coefficient(const SeedFunction& seed, int l1, int l2, Side side);

OverlapTable overlap_table(const SeedFunction& seed, int radius, const OverlapOptions& opts = {});
OverlapTable overlap_table(const SeedFunction& seed, int radius, Side side,
                           const OverlapOptions& opts = {});

struct SeriesOptions {
    std::size_t grid = 4096;
};

SpectralSeries spectral_series(const OverlapTable& table, const SeriesOptions& opts = {});

struct PsfLine {
    int index;  // r2 for the row rule, r1 for the column rule
    cplx lhs;
    cplx rhs;
    double diff;
};

struct PsfReport {
    std::vector<PsfLine> momentum_rows;    // sum_l1 S_{l1,r2} vs a sum hhat(r a) conj hhat((r - 2 r2) a)
    std::vector<PsfLine> position_columns; // sum_l2 S_{r1,l2} vs a/2 sum h(m a/2) conj h((m - 2 r1) a/2)
    long momentum_samples = 0;             // symmetric sample radius used
    long position_samples = 0;
    double max_diff = 0.0;
    double tolerance = 1e-6;
    bool passed = false;
};

PsfReport psf_crosscheck(const SeedFunction& seed, const OverlapTable& table, double tol = 1e-6);

}  // namespace mraseed
