// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mraseed/errors.hpp"
#include "mraseed/seed.hpp"
#include "oracle.hpp"

using namespace mraseed;
using oracle::a;

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * M_PI);

// h(x) = (2 pi)^-1/2 int hhat(p) exp(i p x) dp over [lo, hi].
cplx inverse_transform(const SeedFunction& s, double x, double lo, double hi, int n) {
    return kInvSqrt2Pi * oracle::simpson([&](double p) { return s.h_hat(p) * std::polar(1.0, p * x); }, lo, hi, n);
}

// hhat(p) = (2 pi)^-1/2 int h(x) exp(-i p x) dx over [lo, hi].
cplx forward_transform(const SeedFunction& s, double p, double lo, double hi, int n) {
    return kInvSqrt2Pi * oracle::simpson([&](double x) { return s.h(x) * std::polar(1.0, -p * x); }, lo, hi, n);
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST(Seed, PointValues) {
    const double g0 = std::pow(M_PI, -0.25);
    EXPECT_NEAR(eval_seed(SeedFunction::gaussian(), 0.0).real(), g0, 1e-15);
    EXPECT_NEAR(eval_seed_ft(SeedFunction::gaussian(), 0.0).real(), g0, 1e-15);
    EXPECT_EQ(eval_seed(SeedFunction::box_position(1), -1.0), cplx{});
    EXPECT_NEAR(std::abs(eval_seed(SeedFunction::box_momentum(1), 0.0)), std::pow(2 * M_PI, -0.25), 1e-14);
    EXPECT_NEAR(eval_seed_ft(SeedFunction::box_momentum(2), 0.5 * a).real(), 1.0 / std::sqrt(2 * a), 1e-15);
    EXPECT_NEAR(eval_seed_ft(SeedFunction::lorentzian_ft(), 0.0).real(), 2.0 / a, 1e-15);
}

TEST(Seed, LatticeSamples) {
    const auto b1 = lattice_samples(SeedFunction::box_momentum(1), 2);
    ASSERT_EQ(b1.size(), 5u);
    for (int i = 0; i < 5; ++i) EXPECT_EQ(b1[i], i == 2 ? cplx(1.0 / std::sqrt(a)) : cplx{});

    const auto b2 = lattice_samples(SeedFunction::box_momentum(2), 1);
    EXPECT_EQ(b2[0], cplx{});
    EXPECT_NEAR(b2[1].real(), 1.0 / std::sqrt(2 * a), 1e-15);
    EXPECT_NEAR(b2[2].real(), 1.0 / std::sqrt(2 * a), 1e-15);

    const auto g = lattice_samples(SeedFunction::gaussian(), 1);
    const double g0 = std::pow(M_PI, -0.25);
    EXPECT_NEAR(g[0].real(), g0 * std::exp(-M_PI), 1e-16);
    EXPECT_NEAR(g[1].real(), g0, 1e-15);
    EXPECT_NEAR(g[2].real(), g0 * std::exp(-M_PI), 1e-16);
}

TEST(Seed, LatticeSamplesMatchPointEvaluation) {
    for (const auto& s : {SeedFunction::box_momentum(3), SeedFunction::box_position(1.5),
                          SeedFunction::gaussian(), SeedFunction::lorentzian_ft()})
        for (long n = -6; n <= 6; ++n) {
            EXPECT_LT(std::abs(s.lattice_sample(n) - s.h_hat(n * a)), 1e-13) << s.descriptor() << " n=" << n;
            EXPECT_LT(std::abs(s.half_lattice_sample(n) - s.h(0.5 * n * a)), 1e-13) << s.descriptor() << " m=" << n;
        }
}

// Box seeds are half-open, so the quadrature stops one ulp short of the upper edge.
TEST(Seed, ClosedFormsAgreeWithQuadrature) {
    const auto box = SeedFunction::box_momentum(3);
    for (double x : {-2.0, -0.3, 0.0, 0.7, 5.0})
        EXPECT_LT(std::abs(box.h(x) - inverse_transform(box, x, 0.0, std::nextafter(3 * a, 0.0), 4000)), 1e-10) << x;

    const auto pbox = SeedFunction::box_position(1.5);
    for (double p : {-3.0, 0.0, 1.1, 4.0})
        EXPECT_LT(std::abs(pbox.h_hat(p) - forward_transform(pbox, p, 0.0, std::nextafter(1.5 * a, 0.0), 4000)), 1e-10) << p;

    const auto g = SeedFunction::gaussian();
    for (double x : {0.0, 0.5, 2.0})
        EXPECT_LT(std::abs(g.h(x) - inverse_transform(g, x, -12.0, 12.0, 4000)), 1e-12) << x;

    const auto lor = SeedFunction::lorentzian_ft();
    for (double p : {0.0, 0.4, 3.0}) {
        // h = exp(-|x|) has a kink at 0: integrate the two halves separately.
        const cplx v = forward_transform(lor, p, -45.0, 0.0, 20000) + forward_transform(lor, p, 0.0, 45.0, 20000);
        EXPECT_LT(std::abs(lor.h_hat(p) - v), 1e-10) << p;
    }
}

TEST(Seed, Normalized) {
    const double gn = oracle::simpson([](double p) { return cplx(std::norm(SeedFunction::gaussian().h_hat(p))); },
                                      -12, 12, 2000).real();
    EXPECT_NEAR(gn, 1.0, 1e-12);
    const auto lor = SeedFunction::lorentzian_ft();
    const double ln = oracle::simpson([&](double x) { return cplx(std::norm(lor.h(x))); }, 0, 40, 20000).real();
    EXPECT_NEAR(2.0 * ln, 1.0, 1e-10);
}

TEST(Seed, TabulatedBoxReproducesMomentumBox) {
    std::vector<cplx> v(257, cplx(1.0 / std::sqrt(2 * a)));
    const auto tab = SeedFunction::tabulated(0.0, 2 * a, v);
    const auto box = SeedFunction::box_momentum(2);
    for (long n = -3; n <= 3; ++n) EXPECT_NEAR(std::abs(tab.lattice_sample(n) - box.lattice_sample(n)), 0.0, 1e-15);
    for (double x : {-1.3, 0.0, 0.4, 2.5}) EXPECT_LT(std::abs(tab.h(x) - box.h(x)), 1e-12) << x;
    EXPECT_FALSE(tab.warning());
}

TEST(Seed, TabulatedNormalizationPolicy) {
    std::vector<cplx> v(65, cplx(1.0 / std::sqrt(2 * a) * (1.0 + 1e-4)));
    const auto slightly = SeedFunction::tabulated(0.0, 2 * a, v);
    EXPECT_TRUE(slightly.warning());
    EXPECT_NEAR(slightly.lattice_sample(0).real(), 1.0 / std::sqrt(2 * a), 1e-14);

    std::vector<cplx> w(65, cplx(1.0));
    EXPECT_THROW(SeedFunction::tabulated(0.0, 2 * a, w), NormalizationError);
    EXPECT_THROW(SeedFunction::tabulated(1.0, 1.0, w), ConfigError);
}

TEST(Seed, LoadTabulated) {
    std::ostringstream body;
    body << std::setprecision(17) << "# domain 0 " << 2 * a << " 5\n";
    for (int j = 0; j < 5; ++j) body << 2 * a * j / 4 << "," << 1.0 / std::sqrt(2 * a) << ",0\n";
    const auto s = SeedFunction::load_tabulated(temp_file("mraseed_tab_ok.csv", body.str()));
    EXPECT_NEAR(s.lattice_sample(1).real(), 1.0 / std::sqrt(2 * a), 1e-6);

    EXPECT_THROW(SeedFunction::load_tabulated(temp_file("mraseed_tab_bad.csv", "p,re,im\n0,1,0\n")), ConfigError);
    EXPECT_THROW(SeedFunction::load_tabulated("/nonexistent/seed.csv"), ConfigError);
}

TEST(Seed, CoarseTableFailsPointEvaluation) {
    // Two linear cells of length a with unit norm: a (u^2 + u v + v^2) / 3 per cell.
    const double k = std::sqrt(3.0 / (1.04 * a));
    std::vector<cplx> v{cplx(0.2 * k), cplx(0.6 * k), cplx(0.2 * k)};
    const auto s = SeedFunction::tabulated(0.0, 2 * a, v);
    EXPECT_THROW(eval_seed(s, 3.0), EvaluationError);
}

TEST(Seed, Descriptors) {
    EXPECT_EQ(SeedFunction::box_momentum(2).descriptor(), "box-momentum:2");
    EXPECT_EQ(SeedFunction::box_position(1.5).descriptor(), "box-position:1.5");
    EXPECT_EQ(SeedFunction::gaussian().descriptor(), "gaussian");
    EXPECT_EQ(SeedFunction::lorentzian_ft().descriptor(), "lorentzian");
}
