// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mraseed/overlap.hpp"
#include "mraseed/seed.hpp"
#include "mraseed/sequence.hpp"
#include "mraseed/synthesis.hpp"

namespace mraseed {

enum class Verdict { Pass, Fail, Undetermined };
std::string to_string(Verdict v);

struct Tolerances {
    double r1 = 1e-6;
    double r3 = 1e-6;
    double r4 = 1e-6;
    double pos = 1e-8;
    double criterion = 1e-6;
    double psf = 1e-6;
    double sum_rules = 1e-6;
};

// l -> |sum_n H_n conj(H_{n+2l}) - delta_{l,0}|, exact over the stored support.
std::map<int, double> check_r1(const TruncatedSequence& H, int l_max);

struct R2Result {
    DecayClass decay;
    Verdict verdict = Verdict::Undetermined;
    bool insufficient_tail = false;
};
// Pass for finite support, superpolynomial, or polynomial exponent >= 1.9.
R2Result check_r2(const TruncatedSequence& H);

struct R3Result {
    cplx sum;
    double residual;  // |sum - sqrt 2|
    Verdict verdict;
};
R3Result check_r3(const TruncatedSequence& H, double tol = 1e-6);

struct R4Result {
    double min_modulus;
    double argmin;
    std::size_t grid;
    Verdict verdict;
};
// |H(w)|, H(w) = 2^-1/2 sum_n H_n exp(-i w n), on a uniform grid over [-pi/2, pi/2].
R4Result check_r4(const TruncatedSequence& H, std::size_t grid_size = 4097, double tol = 1e-6);
// H(w) on that grid (values only).
std::vector<cplx> symbol_on_grid(const TruncatedSequence& H, std::size_t grid_size);

struct CriterionR3Result {
    cplx lhs;        // sum_n hhat(n a)
    cplx rhs;        // sqrt(2 S(0) / a), S(0) = sum over the full 2D table
    double s_origin; // S(0)
    double residual;
    long samples;    // symmetric sample radius of the lhs
    Verdict verdict;
};
CriterionR3Result criterion_r3(const SeedFunction& seed, const OverlapTable& table,
                               double tol = 1e-6);

struct CorollaryResult {
    cplx double_sum;       // sum_{n,m} hhat(na) conj(hhat(ma) - 2 hhat((n-2m)a))
    cplx alternating_sum;  // sum_n (-1)^n hhat(n a)
    bool compact = false;
    double identity_residual = 0.0;  // |double_sum + |alternating|^2|, compact seeds only
    Verdict necessary;               // alternating sum vanishes within tol
};
CorollaryResult corollary_check(const SeedFunction& seed, double tol = 1e-10);

struct FactorizationResult {
    double product_residual;  // max |H(w) - sqrt(a/2) K(2w) Hs(-w)| on the grid
    double k_imag_max;        // max |Im K| (meaningful for Zero phase)
    double k_branch_residual; // max |K(nu) - exp(i phi(nu)) / sqrt(S(0, nu))|; NaN for Quadratic
    double k_min_real;
    std::size_t grid;
    bool passed;
};
FactorizationResult factorization_check(const TruncatedSequence& H, const CWeights& c,
                                        const SeedFunction& seed, const SpectralSeries& series,
                                        std::size_t grid_size = 4097, double tol = 1e-8);

struct RelevanceReport {
    std::map<int, double> r1_residuals;
    double r1_max = 0.0;
    R2Result r2;
    R3Result r3;
    R4Result r4;
    std::optional<CriterionR3Result> criterion;
    std::optional<CorollaryResult> corollary;
    std::optional<FactorizationResult> factorization;
    Verdict v1 = Verdict::Undetermined;
    Verdict v2 = Verdict::Undetermined;
    Verdict v3 = Verdict::Undetermined;
    Verdict v4 = Verdict::Undetermined;
    Tolerances tol;
    int l_max = 5;
    std::vector<std::string> notes;

    bool all_pass() const;
};

RelevanceReport assess_filter(const TruncatedSequence& H, const Tolerances& tol = {},
                              int l_max = 5, std::size_t r4_grid = 4097);

}  // namespace mraseed
