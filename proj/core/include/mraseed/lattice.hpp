// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <numbers>

namespace mraseed {

using cplx = std::complex<double>;

// Lattice constant a = sqrt(2 pi); a^2 = 2 pi is the only admissible value.
inline constexpr double kLatticeA = 2.5066282746310002;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

class LatticeConfig {
public:
    LatticeConfig() = default;
    // Throws ConfigError unless a * a == 2 pi to rounding.
    explicit LatticeConfig(double a);

    double a() const noexcept { return a_; }

private:
    double a_ = kLatticeA;
};

}  // namespace mraseed
