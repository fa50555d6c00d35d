// SPDX-License-Identifier: Apache-2.0
#include "mraseed/seed.hpp"

#include <boost/math/special_functions/sin_pi.hpp>
#include <boost/math/special_functions/cos_pi.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "mraseed/errors.hpp"

namespace mraseed {

LatticeConfig::LatticeConfig(double a) : a_(a) {
    if (!(std::abs(a * a - kTwoPi) <= 4.0 * std::numeric_limits<double>::epsilon() * kTwoPi))
        throw ConfigError("lattice constant must satisfy a^2 = 2 pi");
}

std::string to_string(SeedFamily family) {
    switch (family) {
        case SeedFamily::BoxMomentum: return "box-momentum";
        case SeedFamily::BoxPosition: return "box-position";
        case SeedFamily::Gaussian: return "gaussian";
        case SeedFamily::LorentzianFT: return "lorentzian";
        case SeedFamily::Tabulated: return "tabulated";
    }
    return "unknown";
}

std::string to_string(Side side) { return side == Side::Position ? "position" : "momentum"; }

namespace {

constexpr double kA = kLatticeA;
constexpr double kPi = std::numbers::pi;
const double kGaussNorm = std::pow(kPi, -0.25);
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_number(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

// sin(pi z) / (pi z) and exp(i pi z * sign), exact at integers and half-integers.
double sinc_pi(double z) {
    return z == 0.0 ? 1.0 : boost::math::sin_pi(z) / (kPi * z);
}
cplx unit_pi(double z) { return {boost::math::cos_pi(z), boost::math::sin_pi(z)}; }

// phi0 = int_0^1 e^{i t th} dt, phi2 = int_0^1 t e^{i t th} dt.
void filon_weights(double th, cplx& phi0, cplx& phi2) {
    const cplx I{0.0, 1.0};
    if (std::abs(th) < 1e-2) {
        const cplx z = I * th;
        phi0 = 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0 + z * z * z * z / 120.0;
        phi2 = 0.5 + z / 3.0 + z * z / 8.0 + z * z * z / 30.0 + z * z * z * z / 144.0;
        return;
    }
    const cplx e = std::polar(1.0, th);
    phi0 = (e - 1.0) / (I * th);
    phi2 = e / (I * th) + (e - 1.0) / (th * th);
}

}  // namespace

struct SeedFunction::Table {
    double p_min;
    double p_max;
    double dp;
    std::vector<cplx> f;  // samples at p_min + k dp, k = 0..N-1 (last one at p_max)
    double peak;

    cplx value(double p) const {
        if (!(p >= p_min) || !(p < p_max)) return {};
        const double u = (p - p_min) / dp;
        auto k = static_cast<std::size_t>(u);
        if (k >= f.size() - 1) k = f.size() - 2;
        const double t = u - static_cast<double>(k);
        return f[k] + (f[k + 1] - f[k]) * t;
    }

    // (2 pi)^-1/2 int L(p) e^{i p x} dp over cells [k0 + j*stride, k0 + (j+1)*stride].
    cplx inverse(double x, std::size_t stride, std::size_t k_end) const {
        const double width = dp * static_cast<double>(stride);
        cplx phi0, phi2;
        filon_weights(x * width, phi0, phi2);
        const cplx phi1 = phi0 - phi2;
        cplx acc{};
        const cplx step = std::polar(1.0, x * width);
        cplx rot = std::polar(1.0, x * p_min);
        std::size_t count = 0;
        for (std::size_t k = 0; k + stride <= k_end; k += stride, ++count) {
            if (count % 512 == 0) rot = std::polar(1.0, x * (p_min + dp * static_cast<double>(k)));
            acc += rot * (f[k] * phi1 + f[k + stride] * phi2);
            rot *= step;
        }
        return acc * width / std::sqrt(kTwoPi);
    }

    cplx inverse_fine(double x) const { return inverse(x, 1, f.size() - 1); }

    cplx inverse_coarse(double x) const {
        const std::size_t cells = f.size() - 1;
        const std::size_t even_end = cells - cells % 2;
        cplx v = inverse(x, 2, even_end);
        if (cells % 2 == 1) {
            // Final fine cell appended to the coarse rule.
            cplx phi0, phi2;
            filon_weights(x * dp, phi0, phi2);
            const double u = p_min + dp * static_cast<double>(even_end);
            v += std::polar(1.0, x * u) * (f[even_end] * (phi0 - phi2) + f[even_end + 1] * phi2) *
                 dp / std::sqrt(kTwoPi);
        }
        return v;
    }

    double norm_squared() const {
        double s = 0.0;
        for (std::size_t k = 0; k + 1 < f.size(); ++k)
            s += dp / 3.0 *
                 (std::norm(f[k]) + (f[k] * std::conj(f[k + 1])).real() + std::norm(f[k + 1]));
        return s;
    }
};

SeedFunction SeedFunction::box_momentum(double w) {
    if (!(w > 0.0) || !std::isfinite(w)) throw ConfigError("box-momentum width must be positive");
    SeedFunction s;
    s.family_ = SeedFamily::BoxMomentum;
    s.param_ = w;
    return s;
}

SeedFunction SeedFunction::box_position(double d) {
    if (!(d > 0.0) || !std::isfinite(d)) throw ConfigError("box-position width must be positive");
    SeedFunction s;
    s.family_ = SeedFamily::BoxPosition;
    s.param_ = d;
    return s;
}

SeedFunction SeedFunction::gaussian() {
    SeedFunction s;
    s.family_ = SeedFamily::Gaussian;
    return s;
}

SeedFunction SeedFunction::lorentzian_ft() {
    SeedFunction s;
    s.family_ = SeedFamily::LorentzianFT;
    return s;
}

SeedFunction SeedFunction::tabulated(double p_min, double p_max, std::vector<cplx> samples,
                                     double norm_tol) {
    if (!(p_max > p_min)) throw ConfigError("tabulated seed: p_max must exceed p_min");
    if (samples.size() < 2) throw ConfigError("tabulated seed: need at least two samples");
    for (const auto& v : samples)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ConfigError("tabulated seed: non-finite sample");
    auto t = std::make_shared<Table>();
    t->p_min = p_min;
    t->p_max = p_max;
    t->dp = (p_max - p_min) / static_cast<double>(samples.size() - 1);
    t->f = std::move(samples);
    t->peak = 0.0;
    for (const auto& v : t->f) t->peak = std::max(t->peak, std::abs(v));
    SeedFunction s;
    s.family_ = SeedFamily::Tabulated;
    s.param_ = static_cast<double>(t->f.size());
    s.table_ = std::move(t);
    s.normalize(norm_tol);
    return s;
}

SeedFunction SeedFunction::load_tabulated(const std::filesystem::path& path, double norm_tol) {
    std::ifstream in(path);
    if (!in) throw ConfigError("tabulated seed: cannot open " + path.string());
    std::string line;
    double p_min = 0, p_max = 0;
    long n_points = 0;
    {
        if (!std::getline(in, line)) throw ConfigError("tabulated seed: empty file");
        std::istringstream head(line);
        std::string hash, tag;
        if (!(head >> hash >> tag >> p_min >> p_max >> n_points) || hash != "#" || tag != "domain")
            throw ConfigError("tabulated seed: header must read '# domain p_min p_max n_points'");
    }
    if (n_points < 2) throw ConfigError("tabulated seed: n_points must be >= 2");
    const double dp = (p_max - p_min) / static_cast<double>(n_points - 1);
    std::vector<cplx> f;
    f.reserve(static_cast<std::size_t>(n_points));
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double p, re, im;
        if (!(row >> p >> re >> im)) throw ConfigError("tabulated seed: malformed row '" + line + "'");
        const double expected = p_min + dp * static_cast<double>(f.size());
        if (std::abs(p - expected) > 1e-9 * std::max(1.0, std::abs(expected)))
            throw ConfigError("tabulated seed: grid is not uniform at p = " + format_number(p));
        f.emplace_back(re, im);
    }
    if (static_cast<long>(f.size()) != n_points)
        throw ConfigError("tabulated seed: expected " + std::to_string(n_points) + " rows, found " +
                          std::to_string(f.size()));
    return tabulated(p_min, p_max, std::move(f), norm_tol);
}

void SeedFunction::normalize(double norm_tol) {
    raw_norm_ = measure_norm();
    const double dev = std::abs(raw_norm_ - 1.0);
    if (dev <= norm_tol) return;
    if (dev >= 1e-2)
        throw NormalizationError("seed norm " + format_number(raw_norm_) + " is not within 1e-2 of 1",
                                 raw_norm_);
    auto t = std::make_shared<Table>(*table_);
    for (auto& v : t->f) v /= raw_norm_;
    t->peak /= raw_norm_;
    table_ = std::move(t);
    warning_ = "seed rescaled from norm " + format_number(raw_norm_);
}

double SeedFunction::measure_norm() const {
    if (family_ == SeedFamily::Tabulated) return std::sqrt(table_->norm_squared());
    return 1.0;
}

Side SeedFunction::analytic_side() const noexcept {
    switch (family_) {
        case SeedFamily::BoxPosition: return Side::Position;
        case SeedFamily::Gaussian: return Side::Position;
        default: return Side::Momentum;
    }
}

Side SeedFunction::preferred_side() const noexcept {
    switch (family_) {
        case SeedFamily::BoxMomentum:
        case SeedFamily::Tabulated: return Side::Momentum;
        default: return Side::Position;
    }
}

std::string SeedFunction::descriptor() const {
    switch (family_) {
        case SeedFamily::BoxMomentum: return "box-momentum:" + format_number(param_);
        case SeedFamily::BoxPosition: return "box-position:" + format_number(param_);
        case SeedFamily::Gaussian: return "gaussian";
        case SeedFamily::LorentzianFT: return "lorentzian";
        case SeedFamily::Tabulated:
            return "tabulated:" + std::to_string(table_->f.size()) + "@[" +
                   format_number(table_->p_min) + "," + format_number(table_->p_max) + ")";
    }
    return "unknown";
}

cplx SeedFunction::h(double x) const {
    switch (family_) {
        case SeedFamily::BoxMomentum: {
            const double wa = param_ * kA;
            const double th = 0.5 * wa * x;
            const double sinc = th == 0.0 ? 1.0 : std::sin(th) / th;
            return std::sqrt(wa / kTwoPi) * sinc * std::polar(1.0, th);
        }
        case SeedFamily::BoxPosition: {
            const double da = param_ * kA;
            return (x >= 0.0 && x < da) ? cplx{1.0 / std::sqrt(da)} : cplx{};
        }
        case SeedFamily::Gaussian: return kGaussNorm * std::exp(-0.5 * x * x);
        case SeedFamily::LorentzianFT: return std::exp(-std::abs(x));
        case SeedFamily::Tabulated: return table_->inverse_fine(x);
    }
    return {};
}

double SeedFunction::h_error(double x) const {
    if (family_ != SeedFamily::Tabulated) return 0.0;
    return std::abs(table_->inverse_fine(x) - table_->inverse_coarse(x)) / 3.0;
}

cplx SeedFunction::h_hat(double p) const {
    switch (family_) {
        case SeedFamily::BoxMomentum: {
            const double wa = param_ * kA;
            return (p >= 0.0 && p < wa) ? cplx{1.0 / std::sqrt(wa)} : cplx{};
        }
        case SeedFamily::BoxPosition: {
            const double da = param_ * kA;
            const double th = 0.5 * da * p;
            const double sinc = th == 0.0 ? 1.0 : std::sin(th) / th;
            return std::sqrt(da / kTwoPi) * sinc * std::polar(1.0, -th);
        }
        case SeedFamily::Gaussian: return kGaussNorm * std::exp(-0.5 * p * p);
        case SeedFamily::LorentzianFT: return 2.0 / (kA * (1.0 + p * p));
        case SeedFamily::Tabulated: return table_->value(p);
    }
    return {};
}

cplx SeedFunction::lattice_sample(long n) const {
    const double nd = static_cast<double>(n);
    switch (family_) {
        case SeedFamily::BoxMomentum:
            // n a in [0, w a)  <=>  0 <= n < w
            return (n >= 0 && nd < param_) ? cplx{1.0 / std::sqrt(param_ * kA)} : cplx{};
        case SeedFamily::BoxPosition: {
            // p d a / 2 = pi n d at p = n a.
            const double z = nd * param_;
            return std::sqrt(param_ * kA / kTwoPi) * sinc_pi(z) * std::conj(unit_pi(z));
        }
        case SeedFamily::Gaussian: return kGaussNorm * std::exp(-kPi * nd * nd);
        case SeedFamily::LorentzianFT: return 2.0 / (kA * (1.0 + kTwoPi * nd * nd));
        case SeedFamily::Tabulated: return table_->value(nd * kA);
    }
    return {};
}

cplx SeedFunction::half_lattice_sample(long m) const {
    const double md = static_cast<double>(m);
    switch (family_) {
        case SeedFamily::BoxMomentum: {
            // w a x / 2 = pi w m / 2 at x = m a / 2.
            const double z = 0.5 * param_ * md;
            return std::sqrt(param_ * kA / kTwoPi) * sinc_pi(z) * unit_pi(z);
        }
        case SeedFamily::BoxPosition:
            // m a / 2 in [0, d a)  <=>  0 <= m < 2 d
            return (m >= 0 && md < 2.0 * param_) ? cplx{1.0 / std::sqrt(param_ * kA)} : cplx{};
        case SeedFamily::Gaussian: return kGaussNorm * std::exp(-0.25 * kPi * md * md);
        case SeedFamily::LorentzianFT: return std::exp(-0.5 * kA * std::abs(md));
        case SeedFamily::Tabulated: return table_->inverse_fine(0.5 * kA * md);
    }
    return {};
}

bool SeedFunction::compact(Side side) const noexcept {
    switch (family_) {
        case SeedFamily::BoxMomentum:
        case SeedFamily::Tabulated: return side == Side::Momentum;
        case SeedFamily::BoxPosition: return side == Side::Position;
        default: return false;
    }
}

Interval SeedFunction::core(Side side) const noexcept {
    switch (family_) {
        case SeedFamily::BoxMomentum:
            return side == Side::Momentum ? Interval{0.0, param_ * kA} : Interval{-1.0, 1.0};
        case SeedFamily::BoxPosition:
            return side == Side::Position ? Interval{0.0, param_ * kA} : Interval{-1.0, 1.0};
        case SeedFamily::Tabulated:
            return side == Side::Momentum ? Interval{table_->p_min, table_->p_max}
                                          : Interval{-1.0, 1.0};
        default: return {-1.0, 1.0};
    }
}

double SeedFunction::envelope(Side side, double t) const noexcept {
    const double at = std::abs(t);
    switch (family_) {
        case SeedFamily::BoxMomentum: {
            const double wa = param_ * kA;
            if (side == Side::Momentum) return (t >= 0.0 && t < wa) ? 1.0 / std::sqrt(wa) : 0.0;
            return std::min(std::sqrt(wa / kTwoPi), 2.0 / (at * std::sqrt(kTwoPi * wa)));
        }
        case SeedFamily::BoxPosition: {
            const double da = param_ * kA;
            if (side == Side::Position) return (t >= 0.0 && t < da) ? 1.0 / std::sqrt(da) : 0.0;
            return std::min(std::sqrt(da / kTwoPi), 2.0 / (at * std::sqrt(kTwoPi * da)));
        }
        case SeedFamily::Gaussian: return kGaussNorm * std::exp(-0.5 * t * t);
        case SeedFamily::LorentzianFT:
            return side == Side::Position ? std::exp(-at) : 2.0 / (kA * (1.0 + t * t));
        case SeedFamily::Tabulated:
            if (side == Side::Momentum) {
                if (t < table_->p_min || t >= table_->p_max) return 0.0;
                return table_->peak;
            }
            return kInf;
    }
    return kInf;
}

std::vector<double> SeedFunction::breaks(Side side) const {
    switch (family_) {
        case SeedFamily::BoxMomentum:
            return side == Side::Momentum ? std::vector<double>{0.0, param_ * kA}
                                          : std::vector<double>{};
        case SeedFamily::BoxPosition:
            return side == Side::Position ? std::vector<double>{0.0, param_ * kA}
                                          : std::vector<double>{};
        case SeedFamily::LorentzianFT:
            return side == Side::Position ? std::vector<double>{0.0} : std::vector<double>{};
        case SeedFamily::Tabulated: {
            if (side != Side::Momentum) return {};
            std::vector<double> b(table_->f.size());
            for (std::size_t k = 0; k < b.size(); ++k)
                b[k] = table_->p_min + table_->dp * static_cast<double>(k);
            return b;
        }
        default: return {};
    }
}

double SeedFunction::resolution(Side side) const noexcept {
    switch (family_) {
        case SeedFamily::BoxMomentum:
            return side == Side::Momentum ? kInf : 2.0 / (param_ * kA);
        case SeedFamily::BoxPosition:
            return side == Side::Position ? kInf : 2.0 / (param_ * kA);
        case SeedFamily::Gaussian: return 1.0;
        case SeedFamily::LorentzianFT: return side == Side::Position ? 1.0 : 0.5;
        case SeedFamily::Tabulated:
            if (side == Side::Momentum) return table_->dp;
            return kPi / std::max({std::abs(table_->p_min), std::abs(table_->p_max), 1.0});
    }
    return 1.0;
}

long SeedFunction::sample_radius(Side side) const noexcept {
    constexpr long kSlow = 1L << 20;
    const bool integral = param_ == std::floor(param_);
    switch (family_) {
        case SeedFamily::BoxMomentum:
            if (side == Side::Momentum) return static_cast<long>(std::ceil(param_)) + 1;
            // h(m a/2) vanishes for m != 0 when w is an even integer.
            return (integral && static_cast<long>(param_) % 2 == 0) ? 1 : kSlow;
        case SeedFamily::BoxPosition:
            if (side == Side::Position) return static_cast<long>(std::ceil(2.0 * param_)) + 1;
            return integral ? 1 : kSlow;
        case SeedFamily::Gaussian: return side == Side::Momentum ? 8 : 16;
        case SeedFamily::LorentzianFT: return side == Side::Momentum ? kSlow : 48;
        case SeedFamily::Tabulated:
            if (side == Side::Momentum)
                return static_cast<long>(
                           std::ceil(std::max(std::abs(table_->p_min), std::abs(table_->p_max)) / kA)) +
                       1;
            return 4096;
    }
    return kSlow;
}

cplx eval_seed(const SeedFunction& seed, double x) {
    if (seed.family() == SeedFamily::Tabulated) {
        const double err = seed.h_error(x);
        if (err > 1e-8)
            throw EvaluationError("tabulated seed: inverse transform not resolved by the grid", err);
    }
    return seed.h(x);
}

cplx eval_seed_ft(const SeedFunction& seed, double p) { return seed.h_hat(p); }

std::vector<cplx> lattice_samples(const SeedFunction& seed, long n_max) {
    if (n_max < 0) throw ConfigError("lattice_samples: n_max must be >= 0");
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(2 * n_max + 1));
    for (long n = -n_max; n <= n_max; ++n) out.push_back(seed.lattice_sample(n));
    return out;
}

}  // namespace mraseed
