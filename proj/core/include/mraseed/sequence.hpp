// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mraseed/lattice.hpp"

namespace mraseed {

enum class TailFlag { Threshold, Cap };

// Contiguous window of a bi-infinite sequence; entries outside are zero.
struct TruncatedSequence {
    long offset = 0;
    std::vector<cplx> values;
    TailFlag tail = TailFlag::Threshold;

    TruncatedSequence() = default;
    TruncatedSequence(long first, std::vector<cplx> v, TailFlag t = TailFlag::Threshold)
        : offset(first), values(std::move(v)), tail(t) {}

    long first() const noexcept { return offset; }
    long last() const noexcept { return offset + static_cast<long>(values.size()) - 1; }
    std::size_t size() const noexcept { return values.size(); }
    bool empty() const noexcept { return values.empty(); }
    // Zero outside the stored window.
    cplx at(long n) const noexcept;
};

enum class DecayKind { FiniteSupport, Superpolynomial, Polynomial, Undetermined };

struct DecayClass {
    DecayKind kind = DecayKind::Undetermined;
    double exponent = 0.0;  // Polynomial only: |x_n| ~ |n|^-exponent
    double r_squared = 0.0; // fit quality of the log-log regression, when one was run
    double slope = 0.0;     // raw regression slope over the outer window
    int fit_points = 0;
    std::string reason;

    // Membership of the class in l_p, as used by the convolution rules.
    bool in_lp(double p) const;

    static DecayClass finite(std::string why = {});
    static DecayClass superpolynomial(std::string why = {});
    static DecayClass polynomial(double exponent, double r2 = 1.0, std::string why = {});
    static DecayClass undetermined(std::string why = {});
};

std::string to_string(DecayKind kind);
std::string to_string(const DecayClass& cls);

// Full discrete convolution, support length |x| + |y| - 1. Operands are put
// into a canonical order first, so convolve(x, y) and convolve(y, x) agree bitwise.
TruncatedSequence convolve(const TruncatedSequence& x, const TruncatedSequence& y);

// Only the indices at which every term of the sum lies inside both stored
// windows; empty when the shorter operand is longer than the other.
TruncatedSequence valid_convolution(const TruncatedSequence& x, const TruncatedSequence& y);

double lp_norm(const TruncatedSequence& x, double p);

struct DecayOptions {
    double noise_floor = 1e-13;   // relative to max |x_n|
    double descent_band = 1e-3;   // relative level below which entries count as decaying
    double steep_slope = -12.0;   // log-log slopes at or below this are superpolynomial
    double curvature_ratio = 1.25;
    double min_r_squared = 0.9;
    int min_fit_points = 8;
    int min_abs_index = 4;
};

DecayClass classify_decay(const TruncatedSequence& x, const DecayOptions& opts = {});

// Predicted class of x * y from the classes of x and y.
DecayClass convolution_class(const DecayClass& x, const DecayClass& y);

// CSV with header `n,re,im`.
void write_csv(std::ostream& os, const TruncatedSequence& x);
TruncatedSequence read_csv(std::istream& is);

}  // namespace mraseed
