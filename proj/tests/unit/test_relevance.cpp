// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "mraseed/overlap.hpp"
#include "mraseed/relevance.hpp"
#include "mraseed/synthesis.hpp"
#include "oracle.hpp"

using namespace mraseed;
using oracle::a;
using oracle::cplx;

namespace {

TruncatedSequence haar() { return TruncatedSequence(0, {M_SQRT1_2, M_SQRT1_2}); }

struct Built {
    SeedFunction seed;
    SpectralSeries series;
    CWeights c;
    FilterSequence H;
};

Built build(const SeedFunction& s, PhaseSpec phase = PhaseSpec::zero(), int radius = 4) {
    auto series = spectral_series(overlap_table(s, radius));
    auto c = c_weights(series, phase, 0);
    auto H = filter_coefficients(s, c);
    return {s, std::move(series), std::move(c), std::move(H)};
}

}  // namespace

TEST(Relevance, VerdictNames) {
    EXPECT_EQ(to_string(Verdict::Pass), "pass");
    EXPECT_EQ(to_string(Verdict::Fail), "fail");
    EXPECT_EQ(to_string(Verdict::Undetermined), "undetermined");
}

TEST(Relevance, HaarConditions) {
    const auto H = haar();
    for (const auto& [l, r] : check_r1(H, 4)) EXPECT_LT(r, 1e-15) << l;
    EXPECT_EQ(check_r2(H).verdict, Verdict::Pass);
    const auto r3 = check_r3(H);
    EXPECT_NEAR(r3.residual, 0.0, 1e-15);
    EXPECT_EQ(r3.verdict, Verdict::Pass);
    const auto r4 = check_r4(H);
    EXPECT_NEAR(r4.min_modulus, std::cos(M_PI / 4), 1e-12);
    EXPECT_NEAR(std::abs(r4.argmin), M_PI / 2, 1e-12);
    EXPECT_EQ(r4.verdict, Verdict::Pass);
    EXPECT_TRUE(assess_filter(H).all_pass());
}

TEST(Relevance, SingleTapFailsSum) {
    const TruncatedSequence H(0, {1.0});
    const auto r1 = check_r1(H, 3);
    EXPECT_NEAR(r1.at(0), 0.0, 1e-15);
    EXPECT_NEAR(check_r3(H).residual, M_SQRT2 - 1.0, 1e-15);
    EXPECT_EQ(check_r3(H).verdict, Verdict::Fail);
    EXPECT_NEAR(check_r4(H).min_modulus, M_SQRT1_2, 1e-14);
    EXPECT_FALSE(assess_filter(H).all_pass());
}

TEST(Relevance, SymbolMatchesClosedForm) {
    const TruncatedSequence H(-1, {0.25, 0.5, 0.25});
    const auto m = symbol_on_grid(H, 9);
    ASSERT_EQ(m.size(), 9u);
    for (std::size_t j = 0; j < m.size(); ++j) {
        const double w = -M_PI / 2 + M_PI * static_cast<double>(j) / 8.0;
        const cplx ref = (0.25 * std::polar(1.0, w) + 0.5 + 0.25 * std::polar(1.0, -w)) / M_SQRT2;
        EXPECT_NEAR(std::abs(m[j] - ref), 0.0, 1e-14) << j;
    }
}

TEST(Relevance, PolynomialFilterDecay) {
    std::vector<cplx> v;
    for (long n = -400; n <= 400; ++n) v.emplace_back(1.0 / (1.0 + static_cast<double>(n * n)));
    const auto r2 = check_r2(TruncatedSequence(-400, v));
    EXPECT_NEAR(r2.decay.exponent, 2.0, 0.1);
    EXPECT_EQ(r2.verdict, Verdict::Pass);
    std::vector<cplx> w;
    for (long n = -400; n <= 400; ++n) w.emplace_back(1.0 / (1.0 + std::abs(static_cast<double>(n))));
    EXPECT_EQ(check_r2(TruncatedSequence(-400, w)).verdict, Verdict::Fail);
}

TEST(Relevance, CriterionOnOrthonormalSeeds) {
    const auto s = SeedFunction::box_momentum(2);
    const auto cr = criterion_r3(s, overlap_table(s, 4));
    EXPECT_NEAR(cr.rhs.real(), std::sqrt(2.0 / a), 1e-12);
    EXPECT_EQ(cr.verdict, Verdict::Pass);
    const auto one = SeedFunction::box_momentum(1);
    EXPECT_EQ(criterion_r3(one, overlap_table(one, 4)).verdict, Verdict::Fail);
}

TEST(Relevance, CorollaryAlternatingSums) {
    const auto c1 = corollary_check(SeedFunction::box_momentum(1));
    EXPECT_NEAR(std::abs(c1.alternating_sum), 1.0 / std::sqrt(a), 1e-14);
    EXPECT_TRUE(c1.compact);
    EXPECT_LT(c1.identity_residual, 1e-12);
    EXPECT_EQ(c1.necessary, Verdict::Fail);
    const auto c3 = corollary_check(SeedFunction::box_momentum(3));
    EXPECT_NEAR(std::abs(c3.alternating_sum), 1.0 / std::sqrt(3 * a), 1e-14);
    const auto c2 = corollary_check(SeedFunction::box_momentum(2));
    EXPECT_LT(std::abs(c2.alternating_sum), 1e-14);
    EXPECT_EQ(c2.necessary, Verdict::Pass);
}

TEST(Relevance, Factorization) {
    const auto h = build(SeedFunction::box_momentum(2));
    const auto fh = factorization_check(h.H.coeffs, h.c, h.seed, h.series);
    EXPECT_LT(fh.product_residual, 1e-12);
    EXPECT_TRUE(fh.passed);
    const auto b = build(SeedFunction::box_momentum(3));
    const auto fb = factorization_check(b.H.coeffs, b.c, b.seed, b.series);
    EXPECT_LT(fb.product_residual, 1e-8);
    EXPECT_LT(fb.k_branch_residual, 1e-8);
    EXPECT_LT(fb.k_imag_max, 1e-10);
    const auto g = build(SeedFunction::gaussian(), PhaseSpec::zero(), 8);
    EXPECT_TRUE(factorization_check(g.H.coeffs, g.c, g.seed, g.series).passed);
}

TEST(Relevance, LinearPhaseKeepsModulus) {
    const auto z = build(SeedFunction::box_momentum(3));
    const auto l = build(SeedFunction::box_momentum(3), PhaseSpec::linear(3));
    const auto rz = assess_filter(z.H.coeffs);
    const auto rl = assess_filter(l.H.coeffs);
    EXPECT_NEAR(rz.r4.min_modulus, rl.r4.min_modulus, 1e-12);
    EXPECT_NEAR(rz.r1_max, rl.r1_max, 1e-12);
    EXPECT_EQ(rz.v3, rl.v3);
    const auto fl = factorization_check(l.H.coeffs, l.c, l.seed, l.series);
    EXPECT_LT(fl.k_branch_residual, 1e-8);
    EXPECT_LT(fl.product_residual, 1e-8);
}
