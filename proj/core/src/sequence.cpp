// SPDX-License-Identifier: Apache-2.0
#include "mraseed/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mraseed/errors.hpp"

namespace mraseed {

cplx TruncatedSequence::at(long n) const noexcept {
    if (values.empty() || n < first() || n > last()) return {};
    return values[static_cast<std::size_t>(n - offset)];
}

bool DecayClass::in_lp(double p) const {
    switch (kind) {
        case DecayKind::FiniteSupport:
        case DecayKind::Superpolynomial: return true;
        case DecayKind::Polynomial: return p * exponent > 1.0;
        case DecayKind::Undetermined: return false;
    }
    return false;
}

DecayClass DecayClass::finite(std::string why) {
    DecayClass c;
    c.kind = DecayKind::FiniteSupport;
    c.reason = std::move(why);
    return c;
}

DecayClass DecayClass::superpolynomial(std::string why) {
    DecayClass c;
    c.kind = DecayKind::Superpolynomial;
    c.reason = std::move(why);
    return c;
}

DecayClass DecayClass::polynomial(double exponent, double r2, std::string why) {
    DecayClass c;
    c.kind = DecayKind::Polynomial;
    c.exponent = exponent;
    c.r_squared = r2;
    c.slope = -exponent;
    c.reason = std::move(why);
    return c;
}

DecayClass DecayClass::undetermined(std::string why) {
    DecayClass c;
    c.kind = DecayKind::Undetermined;
    c.reason = std::move(why);
    return c;
}

std::string to_string(DecayKind kind) {
    switch (kind) {
        case DecayKind::FiniteSupport: return "finite_support";
        case DecayKind::Superpolynomial: return "superpolynomial";
        case DecayKind::Polynomial: return "polynomial";
        case DecayKind::Undetermined: return "undetermined";
    }
    return "undetermined";
}

std::string to_string(const DecayClass& cls) {
    std::ostringstream os;
    os << to_string(cls.kind);
    if (cls.kind == DecayKind::Polynomial)
        os << "(exponent=" << std::setprecision(4) << cls.exponent << ", r2=" << cls.r_squared
           << ")";
    return os.str();
}

namespace {

bool canonical_less(const TruncatedSequence& x, const TruncatedSequence& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    if (x.offset != y.offset) return x.offset < y.offset;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.values[i].real() != y.values[i].real())
            return x.values[i].real() < y.values[i].real();
        if (x.values[i].imag() != y.values[i].imag())
            return x.values[i].imag() < y.values[i].imag();
    }
    return false;
}

TailFlag combine(TailFlag a, TailFlag b) {
    return (a == TailFlag::Cap || b == TailFlag::Cap) ? TailFlag::Cap : TailFlag::Threshold;
}

struct Fit {
    double slope = 0.0;
    double r2 = 0.0;
    int n = 0;
};

Fit least_squares(const std::vector<double>& u, const std::vector<double>& v, std::size_t lo,
                  std::size_t hi) {
    Fit f;
    f.n = static_cast<int>(hi - lo);
    if (f.n < 2) return f;
    double su = 0, sv = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        su += u[i];
        sv += v[i];
    }
    const double mu = su / f.n, mv = sv / f.n;
    double suu = 0, suv = 0, svv = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        suu += (u[i] - mu) * (u[i] - mu);
        suv += (u[i] - mu) * (v[i] - mv);
        svv += (v[i] - mv) * (v[i] - mv);
    }
    if (suu <= 0.0) return f;
    f.slope = suv / suu;
    f.r2 = svv > 0.0 ? (suv * suv) / (suu * svv) : 1.0;
    return f;
}

}  // namespace

TruncatedSequence convolve(const TruncatedSequence& x, const TruncatedSequence& y) {
    if (x.empty() || y.empty()) return TruncatedSequence(x.offset + y.offset, {}, combine(x.tail, y.tail));
    const bool swap = canonical_less(y, x);
    const TruncatedSequence& a = swap ? y : x;
    const TruncatedSequence& b = swap ? x : y;
    std::vector<cplx> out(a.size() + b.size() - 1, cplx{});
    for (std::size_t i = 0; i < a.size(); ++i) {
        const cplx ai = a.values[i];
        if (ai == cplx{}) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += ai * b.values[j];
    }
    return TruncatedSequence(a.offset + b.offset, std::move(out), combine(a.tail, b.tail));
}

TruncatedSequence valid_convolution(const TruncatedSequence& x, const TruncatedSequence& y) {
    auto full = convolve(x, y);
    if (full.empty()) return full;
    const std::size_t shorter = std::min(x.size(), y.size());
    const std::size_t trim = shorter - 1;
    std::vector<cplx> v(full.values.begin() + static_cast<long>(trim),
                        full.values.end() - static_cast<long>(trim));
    return TruncatedSequence(full.offset + static_cast<long>(trim), std::move(v), full.tail);
}

double lp_norm(const TruncatedSequence& x, double p) {
    if (!(p >= 1.0)) throw ConfigError("lp_norm: p must be >= 1");
    double m = 0.0;
    for (const auto& v : x.values) m = std::max(m, std::abs(v));
    if (m == 0.0 || std::isinf(p)) return m;
    double s = 0.0;
    for (const auto& v : x.values) s += std::pow(std::abs(v) / m, p);
    return m * std::pow(s, 1.0 / p);
}

DecayClass classify_decay(const TruncatedSequence& x, const DecayOptions& opts) {
    double peak = 0.0;
    for (const auto& v : x.values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return DecayClass::finite("all stored entries are zero");
    const double floor = opts.noise_floor * peak;

    // Envelope folded onto |n|.
    const long extent = std::max(std::abs(x.first()), std::abs(x.last()));
    std::vector<double> env(static_cast<std::size_t>(extent) + 1, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const long m = std::abs(x.offset + static_cast<long>(i));
        env[static_cast<std::size_t>(m)] = std::max(env[static_cast<std::size_t>(m)], std::abs(x.values[i]));
    }
    long last_sig = -1;
    for (long m = extent; m >= 0; --m)
        if (env[static_cast<std::size_t>(m)] > floor) {
            last_sig = m;
            break;
        }
    // At least two stored |n| beyond the last significant one: decay was observed to completion.
    const bool resolved = extent - last_sig >= 2;

    std::vector<double> lu, lv;
    const long w_lo = std::max<long>(opts.min_abs_index, last_sig / 2);
    for (long m = w_lo; m <= last_sig; ++m) {
        const double e = env[static_cast<std::size_t>(m)];
        if (e > floor) {
            lu.push_back(std::log(static_cast<double>(m)));
            lv.push_back(std::log(e));
        }
    }

    if (static_cast<int>(lu.size()) >= opts.min_fit_points) {
        const Fit all = least_squares(lu, lv, 0, lu.size());
        const std::size_t half = lu.size() / 2;
        const Fit inner = least_squares(lu, lv, 0, half);
        const Fit outer = least_squares(lu, lv, half, lu.size());
        DecayClass cls;
        cls.slope = all.slope;
        cls.r_squared = all.r2;
        cls.fit_points = all.n;
        if (all.slope <= opts.steep_slope) {
            cls.kind = DecayKind::Superpolynomial;
            cls.reason = "log-log slope below threshold";
            return cls;
        }
        if (inner.slope < 0.0 && outer.slope < opts.curvature_ratio * inner.slope) {
            cls.kind = DecayKind::Superpolynomial;
            cls.reason = "log-log slope steepening across the window";
            return cls;
        }
        if (all.r2 < opts.min_r_squared || all.slope >= 0.0) {
            cls.kind = DecayKind::Undetermined;
            cls.reason = all.slope >= 0.0 ? "tail not decreasing" : "poor power-law fit";
            return cls;
        }
        cls.kind = DecayKind::Polynomial;
        cls.exponent = -all.slope;
        cls.reason = "power-law fit over outer half";
        return cls;
    }

    bool descending = false;
    for (long m = 0; m <= last_sig; ++m) {
        const double e = env[static_cast<std::size_t>(m)];
        if (e > floor && e < opts.descent_band * peak) descending = true;
    }
    if (!descending) return DecayClass::finite("no entries between the noise floor and the descent band");
    if (resolved) return DecayClass::superpolynomial("decays below the noise floor within the window");
    return DecayClass::undetermined("too few tail samples");
}

DecayClass convolution_class(const DecayClass& x, const DecayClass& y) {
    if (x.kind == DecayKind::Undetermined || y.kind == DecayKind::Undetermined)
        return DecayClass::undetermined("undetermined operand");
    if (x.kind == DecayKind::FiniteSupport) return y;
    if (y.kind == DecayKind::FiniteSupport) return x;
    if (x.kind == DecayKind::Superpolynomial && y.kind == DecayKind::Superpolynomial)
        return DecayClass::superpolynomial("rapidly decreasing convolution");
    if (x.kind == DecayKind::Superpolynomial) return y;
    if (y.kind == DecayKind::Superpolynomial) return x;
    if (!x.in_lp(1.0) && !y.in_lp(1.0))
        return DecayClass::undetermined("neither operand is summable");
    const DecayClass& slow = x.exponent <= y.exponent ? x : y;
    return DecayClass::polynomial(slow.exponent, slow.r_squared, "slower polynomial tail");
}

void write_csv(std::ostream& os, const TruncatedSequence& x) {
    const auto flags = os.flags();
    const auto prec = os.precision();
    os << "n,re,im\n" << std::setprecision(17);
    for (std::size_t i = 0; i < x.size(); ++i)
        os << x.offset + static_cast<long>(i) << ',' << x.values[i].real() << ','
           << x.values[i].imag() << '\n';
    os.flags(flags);
    os.precision(prec);
}

TruncatedSequence read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("n,re,im", 0) != 0)
        throw ConfigError("sequence csv: expected header n,re,im");
    TruncatedSequence out;
    long expected = 0;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        long n;
        double re, im;
        char c1, c2;
        if (!(row >> n >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',')
            throw ConfigError("sequence csv: malformed row '" + line + "'");
        if (first) {
            out.offset = n;
            expected = n;
            first = false;
        }
        if (n != expected) throw ConfigError("sequence csv: indices must be contiguous");
        out.values.emplace_back(re, im);
        ++expected;
    }
    return out;
}

}  // namespace mraseed
