// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "mraseed/errors.hpp"
#include "mraseed/overlap.hpp"
#include "oracle.hpp"

using namespace mraseed;
using oracle::a;

namespace {

double gaussian_overlap(int r1, int r2) { return std::exp(-M_PI / 2 * (r1 * r1 + 4.0 * r2 * r2)); }

// Residue calculus on the momentum form; the r2 = 0 row has a double pole.
double lorentzian_overlap(int r1, int r2) {
    const double e = std::exp(-std::abs(r1) * a);
    return r2 == 0 ? (1.0 + std::abs(r1) * a) * e : e / (1.0 + 2 * M_PI * r2 * r2);
}

double max_table_error(const OverlapTable& t, double (*ref)(int, int)) {
    double e = 0.0;
    for (int l1 = -t.radius; l1 <= t.radius; ++l1)
        for (int l2 = -t.radius; l2 <= t.radius; ++l2) e = std::max(e, std::abs(t.at(l1, l2) - ref(l1, l2)));
    return e;
}

double delta(int l1, int l2) { return l1 == 0 && l2 == 0 ? 1.0 : 0.0; }

}  // namespace

TEST(Overlap, SingleEntries) {
    EXPECT_NEAR(overlap_coefficient(SeedFunction::gaussian(), 1, 0).real(), std::exp(-M_PI / 2), 1e-12);
    EXPECT_NEAR(overlap_coefficient(SeedFunction::box_momentum(3), 0, 1).real(), 1.0 / 3.0, 1e-12);
    for (const auto& s : {SeedFunction::gaussian(), SeedFunction::box_momentum(2), SeedFunction::box_position(1.5),
                          SeedFunction::lorentzian_ft()})
        EXPECT_NEAR(std::abs(overlap_coefficient(s, 0, 0) - 1.0), 0.0, 1e-10) << s.descriptor();
}

TEST(Overlap, GaussianTableBothRepresentations) {
    const auto g = SeedFunction::gaussian();
    EXPECT_LT(max_table_error(overlap_table(g, 3, Side::Position), gaussian_overlap), 1e-13);
    EXPECT_LT(max_table_error(overlap_table(g, 3, Side::Momentum), gaussian_overlap), 1e-13);
}

TEST(Overlap, OrthonormalBoxesGiveDelta) {
    EXPECT_LT(max_table_error(overlap_table(SeedFunction::box_momentum(1), 2), delta), 1e-12);
    EXPECT_LT(max_table_error(overlap_table(SeedFunction::box_momentum(2), 2), delta), 1e-12);
}

TEST(Overlap, LorentzianCorrectedClosedForm) {
    const auto t = overlap_table(SeedFunction::lorentzian_ft(), 3);
    EXPECT_LT(max_table_error(t, lorentzian_overlap), 1e-9);
    // Independent check of the r2 = 0 row: position form with h = exp(-|x|).
    const auto f = [](double x) { return oracle::cplx(std::exp(-std::abs(x - a) - std::abs(x))); };
    const double s10 = (oracle::simpson(f, -40, 0, 20000) + oracle::simpson(f, 0, a, 4000) +
                        oracle::simpson(f, a, 40 + a, 20000)).real();
    EXPECT_NEAR(t.at(1, 0).real(), s10, 1e-9);
    EXPECT_GT(std::abs(s10 - std::exp(-a)), 0.1);
}

TEST(Overlap, AdaptiveAndBatchedRoutesAgree) {
    for (const auto& s : {SeedFunction::box_position(1.5), SeedFunction::lorentzian_ft(), SeedFunction::box_momentum(3)}) {
        const auto t = overlap_table(s, 2);
        for (int l1 = -2; l1 <= 2; ++l1)
            for (int l2 = -2; l2 <= 2; ++l2)
                EXPECT_LT(std::abs(t.at(l1, l2) - overlap_coefficient(s, l1, l2)), 1e-9)
                    << s.descriptor() << " " << l1 << "," << l2;
    }
}

TEST(Overlap, SlowSideRejected) {
    EXPECT_THROW(overlap_coefficient(SeedFunction::box_momentum(3), 0, 1, Side::Position), ConfigError);
}

TEST(Overlap, UnderTruncationFlag) {
    EXPECT_TRUE(overlap_table(SeedFunction::lorentzian_ft(), 4).under_truncated);
    EXPECT_FALSE(overlap_table(SeedFunction::gaussian(), 4).under_truncated);
}

TEST(SpectralSeries, MomentumBoxWidthThree) {
    const auto s = spectral_series(overlap_table(SeedFunction::box_momentum(3), 4));
    for (int r = -4; r <= 4; ++r)
        EXPECT_NEAR(std::abs(s.T(r) - (r == 0 ? 1.0 : std::abs(r) == 1 ? 1.0 / 3.0 : 0.0)), 0.0, 1e-12) << r;
    EXPECT_NEAR(s.min_value, 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(s.min_location, M_PI, 1e-6);
    EXPECT_NEAR(s(0.7), 1.0 + 2.0 / 3.0 * std::cos(0.7), 1e-12);
}

TEST(SpectralSeries, UnitForOrthonormalSeed) {
    const auto s = spectral_series(overlap_table(SeedFunction::box_momentum(1), 3));
    for (double p : {0.0, 1.0, 3.0, 6.0}) EXPECT_NEAR(s(p), 1.0, 1e-12);
}

TEST(SpectralSeries, GaussianMeanTerm) {
    const auto t = overlap_table(SeedFunction::gaussian(), 8);
    const auto s = spectral_series(t);
    const double theta = oracle::lattice_sum([](long r) { return std::exp(-M_PI / 2 * r * r); }, 40);
    EXPECT_NEAR(s.T(0).real(), theta, 1e-13);
    EXPECT_NEAR(s.T(0).real(), 1.4195, 5e-4);
    // S(0) via the 2D table and via the 1D series at p = 0.
    EXPECT_NEAR(t.total().real(), s(0.0), 1e-13);
}

TEST(Psf, RowAndColumnRules) {
    const auto g = SeedFunction::gaussian();
    const auto rep = psf_crosscheck(g, overlap_table(g, 6));
    EXPECT_TRUE(rep.passed);
    const auto& row0 = rep.momentum_rows[6];
    ASSERT_EQ(row0.index, 0);
    EXPECT_LT(row0.diff, 1e-8);
    const double rhs = a / std::sqrt(M_PI) * oracle::lattice_sum([](long m) { return std::exp(-a * a * m * m); }, 10);
    EXPECT_NEAR(row0.rhs.real(), rhs, 1e-13);

    const auto b1 = SeedFunction::box_momentum(1);
    const auto r1 = psf_crosscheck(b1, overlap_table(b1, 2));
    EXPECT_NEAR(r1.momentum_rows[2].lhs.real(), 1.0, 1e-12);
    EXPECT_NEAR(r1.momentum_rows[2].rhs.real(), 1.0, 1e-12);

    const auto b3 = SeedFunction::box_momentum(3);
    const auto r3 = psf_crosscheck(b3, overlap_table(b3, 2));
    EXPECT_EQ(r3.momentum_rows[3].index, 1);
    EXPECT_NEAR(r3.momentum_rows[3].lhs.real(), 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(r3.momentum_rows[3].rhs.real(), 1.0 / 3.0, 1e-12);
}
