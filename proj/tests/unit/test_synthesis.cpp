// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "mraseed/errors.hpp"
#include "mraseed/synthesis.hpp"
#include "oracle.hpp"

using namespace mraseed;
using oracle::a;
using oracle::cplx;

namespace {

struct Fixture {
    SeedFunction seed;
    OverlapTable table;
    SpectralSeries series;
};

Fixture make(const SeedFunction& s, int radius = 8) {
    auto t = overlap_table(s, radius);
    auto ser = spectral_series(t);
    return {s, std::move(t), std::move(ser)};
}

// Gaussian S(p1, p2) factorizes into two theta series.
double theta1(double p) {
    double s = 0.0;
    for (int r = -30; r <= 30; ++r) s += std::exp(-M_PI / 2 * r * r) * std::cos(p * r);
    return s;
}
double theta2(double p) {
    double s = 0.0;
    for (int r = -10; r <= 10; ++r) s += std::exp(-2 * M_PI * r * r) * std::cos(p * r);
    return s;
}

double max_diff(const FilterSequence& x, const FilterSequence& y) {
    double d = 0.0;
    const long lo = std::min(x.n_min(), y.n_min()), hi = std::max(x.n_max(), y.n_max());
    for (long n = lo; n <= hi; ++n) d = std::max(d, std::abs(x.at(n) - y.at(n)));
    return d;
}

}  // namespace

TEST(CWeights, UnitSeriesGivesDelta) {
    const auto f = make(SeedFunction::box_momentum(1), 3);
    const auto c = c_weights(f.series, PhaseSpec::zero(), 16);
    for (long s = -16; s <= 16; ++s) EXPECT_NEAR(std::abs(c.at(s) - (s == 0 ? 1.0 : 0.0)), 0.0, 1e-13);
    const auto l = c_weights(f.series, PhaseSpec::linear(3), 16);
    for (long s = -13; s <= 19; ++s) EXPECT_NEAR(std::abs(l.at(s) - (s == 3 ? 1.0 : 0.0)), 0.0, 1e-13);
}

TEST(CWeights, GaussianAgainstDirectQuadrature) {
    const auto f = make(SeedFunction::gaussian());
    const auto c = c_weights(f.series, PhaseSpec::zero(), 0);
    const auto g = [](double p) { return cplx(1.0 / std::sqrt(theta1(0.0) * theta2(p))); };
    for (long s = 0; s <= 4; ++s) EXPECT_NEAR(std::abs(c.at(s) - oracle::fourier_coefficient(g, s, 512)), 0.0, 1e-13) << s;
    EXPECT_NEAR(c.at(0).real(), 0.83933, 1e-5);
    EXPECT_NEAR(c.at(1).real(), -std::exp(-2 * M_PI) / (2 * std::sqrt(1.4195)), 2e-6);
    EXPECT_TRUE(c.converged);
    EXPECT_FALSE(c.tail_flag);
}

TEST(CWeights, MomentumBoxWidthThree) {
    const auto f = make(SeedFunction::box_momentum(3), 4);
    const auto c = c_weights(f.series, PhaseSpec::zero(), 0);
    const auto g = [](double p) { return cplx(1.0 / std::sqrt(1.0 + 2.0 / 3.0 * std::cos(p))); };
    for (long s = -10; s <= 10; ++s) EXPECT_NEAR(std::abs(c.at(s) - oracle::fourier_coefficient(g, s, 4096)), 0.0, 1e-12) << s;
}

TEST(CWeights, EvenWidthBoxIsNotPositive) {
    const auto f = make(SeedFunction::box_momentum(4), 4);
    EXPECT_THROW(c_weights(f.series, PhaseSpec::zero(), 0), PositivityError);
}

TEST(CWeights, Expansion) {
    const auto f = make(SeedFunction::gaussian());
    const double T0 = f.series.T(0).real();
    const auto c0 = c_weights_expansion(f.series, 0);
    EXPECT_EQ(c0.s_min, 0);
    EXPECT_DOUBLE_EQ(c0.at(0).real(), 1.0 / std::sqrt(T0));
    const auto c1 = c_weights_expansion(f.series, 1);
    EXPECT_DOUBLE_EQ(c1.at(1).real(), -f.series.T(1).real() / (2 * T0 * std::sqrt(T0)));
}

TEST(CWeights, QuadraticPhaseOnUnitSeries) {
    const auto f = make(SeedFunction::box_momentum(2), 3);
    const double gamma = 1.0;
    const auto c = c_weights(f.series, PhaseSpec::quadratic(gamma), 32);
    for (long s = -5; s <= 5; ++s) {
        const auto ref = oracle::simpson(
                             [&](double p) { return std::polar(1.0, gamma * p * p - p * static_cast<double>(s)); },
                             0.0, 2 * M_PI, 200000) / (2 * M_PI);
        EXPECT_NEAR(std::abs(c.at(s) - ref), 0.0, 1e-10) << s;
    }
    EXPECT_THROW(PhaseSpec::quadratic(0.0), ConfigError);
}

TEST(FWeights, DeltaForOrthonormalSeed) {
    const auto f = make(SeedFunction::box_momentum(2), 3);
    const auto w = f_weights(f.table, PhaseSpec::zero(), 3);
    for (int l1 = -3; l1 <= 3; ++l1)
        for (int l2 = -3; l2 <= 3; ++l2)
            EXPECT_NEAR(std::abs(w.at(l1, l2) - (l1 == 0 && l2 == 0 ? 1.0 : 0.0)), 0.0, 1e-12);
}

TEST(FWeights, GaussianAgainstSeparableQuadrature) {
    const auto f = make(SeedFunction::gaussian());
    // f decays like 0.22^|l1| (complex zero of the theta series), so radius 16.
    const auto w = f_weights(f.table, PhaseSpec::zero(), 16);
    const auto g1 = [](double p) { return cplx(1.0 / std::sqrt(theta1(p))); };
    const auto g2 = [](double p) { return cplx(1.0 / std::sqrt(theta2(p))); };
    for (int l1 = 0; l1 <= 2; ++l1)
        for (int l2 = 0; l2 <= 2; ++l2) {
            const cplx ref = oracle::fourier_coefficient(g1, l1, 256) * oracle::fourier_coefficient(g2, l2, 256);
            EXPECT_NEAR(std::abs(w.at(l1, l2) - ref), 0.0, 1e-12) << l1 << "," << l2;
        }
    // Summing over l1 recovers c_s.
    const auto c = c_weights(f.series, PhaseSpec::zero(), 16);
    for (int s = -3; s <= 3; ++s) {
        cplx sum{};
        for (int l1 = -16; l1 <= 16; ++l1) sum += w.at(l1, s);
        EXPECT_NEAR(std::abs(sum - c.at(s)), 0.0, 1e-10) << s;
    }
    EXPECT_THROW(f_weights(f.table, PhaseSpec::quadratic(1.0), 2), ConfigError);
}

TEST(Filter, HaarAndSingleTap) {
    const auto haar = make(SeedFunction::box_momentum(2), 3);
    const auto H = filter_coefficients(haar.seed, c_weights(haar.series, PhaseSpec::zero(), 0));
    for (long n = H.n_min(); n <= H.n_max(); ++n)
        EXPECT_NEAR(std::abs(H.at(n) - (n == 0 || n == 1 ? M_SQRT1_2 : 0.0)), 0.0, 1e-13) << n;

    const auto one = make(SeedFunction::box_momentum(1), 3);
    const auto H1 = filter_coefficients(one.seed, c_weights(one.series, PhaseSpec::zero(), 0));
    EXPECT_NEAR(H1.at(0).real(), 1.0, 1e-13);
}

TEST(Filter, GaussianLeadingTerms) {
    const auto f = make(SeedFunction::gaussian());
    const auto H = filter_coefficients(f.seed, c_weights(f.series, PhaseSpec::zero(), 0));
    const double lead = std::pow(2.0, 0.25) / std::sqrt(1.4195);
    EXPECT_NEAR(H.at(0).real(), lead, 1e-3);
    EXPECT_NEAR(H.at(1).real(), lead * std::exp(-M_PI), 1e-3);
    EXPECT_NEAR(H.at(-1).real(), H.at(1).real(), 1e-15);
}

TEST(Filter, ConvolutionRouteMatchesDirect) {
    for (const auto& s : {SeedFunction::box_momentum(2), SeedFunction::gaussian(), SeedFunction::box_momentum(3)}) {
        const auto f = make(s);
        const auto c = c_weights(f.series, PhaseSpec::zero(), 0);
        const auto direct = filter_coefficients(s, c, -40, 40);
        const auto conv = filter_via_convolution(s, c, -40, 40);
        EXPECT_LT(max_diff(direct, conv), 1e-12) << s.descriptor();
    }
}

TEST(Filter, TwoDimensionalRouteMatches) {
    const auto f = make(SeedFunction::gaussian());
    const auto c = c_weights(f.series, PhaseSpec::zero(), 0);
    const auto w = f_weights(f.table, PhaseSpec::zero(), 16);
    EXPECT_LT(max_diff(filter_coefficients(f.seed, c, -12, 12), filter_via_f(f.seed, w, -12, 12)), 1e-8);
}

TEST(Filter, LinearPhaseShiftsIndices) {
    const auto f = make(SeedFunction::box_momentum(3), 4);
    const auto c0 = c_weights(f.series, PhaseSpec::zero(), 0);
    const auto c2 = c_weights(f.series, PhaseSpec::linear(2), 0);
    const auto H0 = filter_coefficients(f.seed, c0);
    const auto H2 = filter_coefficients(f.seed, c2);
    for (long n = -40; n <= 40; ++n) EXPECT_EQ(H2.at(n - 4), H0.at(n)) << n;
}

TEST(Filter, CapFlag) {
    const auto f = make(SeedFunction::box_position(1.5));
    FilterOptions o;
    o.n_cap = 64;
    const auto H = filter_coefficients(f.seed, c_weights(f.series, PhaseSpec::zero(), 0), o);
    EXPECT_TRUE(H.cap_hit);
    EXPECT_EQ(H.coeffs.tail, TailFlag::Cap);
    EXPECT_EQ(H.n_max(), 64);
}

TEST(Synthesis, OrthonormalSeedIsUnchanged) {
    const auto f = make(SeedFunction::box_momentum(2), 3);
    const auto w = f_weights(f.table, PhaseSpec::zero(), 3);
    for (double P : {-1.0, 0.0, 0.3, 2.0}) EXPECT_LT(std::abs(synthesize_H(f.seed, w, P) - f.seed.h(P)), 1e-12);
    for (double p : {0.5, 3.0, 6.0}) EXPECT_LT(std::abs(synthesize_H_ft(f.seed, w, p) - f.seed.h_hat(p)), 1e-12);
    EXPECT_LT(std::abs(onc_residual(f.seed, w, 1, 1).residual), 1e-8);
}

TEST(Synthesis, GaussianOnc) {
    const auto f = make(SeedFunction::gaussian());
    const auto w = f_weights(f.table, PhaseSpec::zero(), 16);
    EXPECT_LT(std::abs(onc_residual(f.seed, w, 0, 0).residual), 1e-6);
    EXPECT_LT(std::abs(onc_residual(f.seed, w, 1, 0).residual), 1e-6);
}
