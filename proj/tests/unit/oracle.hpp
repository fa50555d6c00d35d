// SPDX-License-Identifier: Apache-2.0
// Reference computations for tests. Deliberately naive and independent of the
// library's quadrature and FFT code.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline const double a = std::sqrt(2.0 * std::numbers::pi);

// Composite Simpson rule with n (even) intervals.
inline cplx simpson(const std::function<cplx(double)>& f, double lo, double hi, int n) {
    if (n % 2) ++n;
    const double h = (hi - lo) / n;
    cplx s = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(lo + h * i);
    return s * h / 3.0;
}

// (1/2pi) int_0^2pi g(p) exp(-i p s) dp by an N-point rectangle rule (exact for
// trigonometric polynomials, spectrally accurate for smooth periodic g).
inline cplx fourier_coefficient(const std::function<cplx(double)>& g, long s, int N) {
    cplx acc{};
    for (int j = 0; j < N; ++j) {
        const double p = 2.0 * std::numbers::pi * j / N;
        acc += g(p) * std::polar(1.0, -p * static_cast<double>(s));
    }
    return acc / static_cast<double>(N);
}

// sum_{|n| <= N} f(n), smallest terms first.
inline double lattice_sum(const std::function<double(long)>& f, long N) {
    double s = 0.0;
    for (long n = N; n >= 1; --n) s += f(n) + f(-n);
    return s + f(0);
}

}  // namespace oracle
