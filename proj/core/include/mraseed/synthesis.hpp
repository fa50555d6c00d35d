// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "mraseed/lattice.hpp"
#include "mraseed/overlap.hpp"
#include "mraseed/seed.hpp"
#include "mraseed/sequence.hpp"

namespace mraseed {

enum class PhaseKind { Zero, Linear, Quadratic };

// phi(p) = 0, K0 p, or gamma p^2 on [0, 2 pi).
struct PhaseSpec {
    PhaseKind kind = PhaseKind::Zero;
    long K0 = 0;
    double gamma = 0.0;

    static PhaseSpec zero() { return {}; }
    static PhaseSpec linear(long K0);
    static PhaseSpec quadratic(double gamma);
    std::string descriptor() const;
};

// c_s = (1/2pi) int_0^2pi exp(-i p s + i phi(p)) / sqrt(S(0, p)) dp.
struct CWeights {
    long s_min = 0;
    std::vector<cplx> values;
    PhaseSpec phase;
    long s_radius = 0;         // requested |s| bound (before any linear-phase shift)
    std::size_t grid = 0;      // final quadrature size (points or panels)
    double convergence = 0.0;  // max change between the last two grids
    bool converged = false;
    bool tail_flag = false;    // boundary |c_s| >= c_tail_tol

    long s_max() const noexcept { return s_min + static_cast<long>(values.size()) - 1; }
    cplx at(long s) const noexcept;
    TruncatedSequence sequence() const;
};

struct CWeightsOptions {
    double pos_tol = 1e-8;
    double c_tail_tol = 1e-10;
    double agreement = 1e-12;
    std::size_t max_grid = std::size_t{1} << 22;
};

// s_max == 0 picks the radius automatically: doubled from 64 until the boundary
// coefficients fall below 1e-13 of the largest one, or up to 8192.
CWeights c_weights(const SpectralSeries& series, const PhaseSpec& phase, long s_max,
                   const CWeightsOptions& opts = {});

// First-order expansion of 1/sqrt(S) about its mean T_0:
// order 0 gives c = delta / sqrt(T_0); order 1 adds c_r = -T_r / (2 T_0 sqrt(T_0)).
CWeights c_weights_expansion(const SpectralSeries& series, int order);

// f_l, the 2D Fourier coefficients of exp(i phi(p2)) / sqrt(S(p1, p2)).
struct SynthesisWeights2D {
    int radius = 0;
    std::vector<cplx> values;  // row-major in (l1, l2), each in [-radius, radius]
    PhaseSpec phase;
    std::size_t grid = 0;
    double convergence = 0.0;

    cplx at(int l1, int l2) const;
};

// Zero and Linear phases only; Quadratic throws ConfigError.
SynthesisWeights2D f_weights(const OverlapTable& table, const PhaseSpec& phase, int radius,
                             const CWeightsOptions& opts = {});

struct FilterSequence {
    TruncatedSequence coeffs;  // H_n
    std::string seed;
    std::string phase;
    long s_min = 0;
    long s_max = 0;
    long n_cap = 0;
    bool cap_hit = false;

    long n_min() const noexcept { return coeffs.first(); }
    long n_max() const noexcept { return coeffs.last(); }
    cplx at(long n) const noexcept { return coeffs.at(n); }
};

struct FilterOptions {
    long n_start = 16;
    long n_cap = 512;
    double edge_tol = 1e-12;
    int edge_width = 4;
};

// H_n = sqrt(a) sum_s c_s hhat((n + 2 s) a), range grown from [-n_start, n_start]
// by doubling until the outer entries fall below edge_tol or n_cap is reached.
FilterSequence filter_coefficients(const SeedFunction& seed, const CWeights& c,
                                   const FilterOptions& opts = {});
// Fixed range [n_lo, n_hi], no growth.
FilterSequence filter_coefficients(const SeedFunction& seed, const CWeights& c, long n_lo,
                                   long n_hi);

// H_2n = sqrt(a) (cbar * hhat_even)_n, H_2n+1 = sqrt(a) (cbar * hhat_odd)_n with
// cbar_t = c_-t, evaluated on [n_lo, n_hi].
FilterSequence filter_via_convolution(const SeedFunction& seed, const CWeights& c, long n_lo,
                                      long n_hi);

// H_n = sqrt(a) sum_l f_l hhat((n + 2 l2) a) on [n_lo, n_hi].
FilterSequence filter_via_f(const SeedFunction& seed, const SynthesisWeights2D& f, long n_lo,
                            long n_hi);

// H(P) = sum_l f_l h(P - a l1) exp(-2 i a P l2).
cplx synthesize_H(const SeedFunction& seed, const SynthesisWeights2D& f, double P);
// Its transform: sum_l f_l exp(-i p a l1) hhat(p + 2 a l2).
cplx synthesize_H_ft(const SeedFunction& seed, const SynthesisWeights2D& f, double p);

struct OncResult {
    cplx integral;
    cplx residual;  // integral - delta_{l,0}
    double error;   // quadrature error estimate
};

// int H(P) conj(H(P - a l1)) exp(-2 i a P l2) dP - delta, in the seed's preferred side.
OncResult onc_residual(const SeedFunction& seed, const SynthesisWeights2D& f, int l1, int l2);

}  // namespace mraseed
