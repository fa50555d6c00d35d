// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mraseed/lattice.hpp"

namespace mraseed {

enum class SeedFamily { BoxMomentum, BoxPosition, Gaussian, LorentzianFT, Tabulated };
enum class Side { Position, Momentum };

std::string to_string(SeedFamily family);
std::string to_string(Side side);

struct Interval {
    double lo;
    double hi;
};

// Normalized seed h(x) together with its Fourier transform
// hhat(p) = (2 pi)^-1/2 int exp(-i p x) h(x) dx. Immutable after construction.
class SeedFunction {
public:
    // hhat = (w a)^-1/2 on [0, w a).
    static SeedFunction box_momentum(double w);
    // h = (d a)^-1/2 on [0, d a).
    static SeedFunction box_position(double d);
    // h = hhat = pi^-1/4 exp(-x^2 / 2).
    static SeedFunction gaussian();
    // hhat = 2 / (a (1 + p^2)), h = exp(-|x|).
    static SeedFunction lorentzian_ft();
    // Linear interpolant of uniform samples on [p_min, p_max), zero elsewhere.
    static SeedFunction tabulated(double p_min, double p_max, std::vector<cplx> samples,
                                  double norm_tol = 1e-6);
    // File format: `# domain p_min p_max n_points` then rows `p,re,im`.
    static SeedFunction load_tabulated(const std::filesystem::path& path, double norm_tol = 1e-6);

    SeedFamily family() const noexcept { return family_; }
    Side analytic_side() const noexcept;
    // Representation used for overlap integrals: the side with fast decay.
    Side preferred_side() const noexcept;
    double parameter() const noexcept { return param_; }
    std::string descriptor() const;

    // Norm measured at construction, before any rescaling.
    double raw_norm() const noexcept { return raw_norm_; }
    const std::optional<std::string>& warning() const noexcept { return warning_; }

    cplx h(double x) const;
    cplx h_hat(double p) const;
    // Estimated error of h(x) for tabulated seeds (0 for closed forms).
    double h_error(double x) const;

    // hhat(n a), exact on the lattice (box edges follow the half-open convention).
    cplx lattice_sample(long n) const;
    // h(m a / 2), the position-side lattice used by the column sum rule.
    cplx half_lattice_sample(long m) const;

    // Whether the given side has compact support, and the support or core interval.
    bool compact(Side side) const noexcept;
    Interval core(Side side) const noexcept;
    // Upper bound for |h| or |hhat| at t.
    double envelope(Side side, double t) const noexcept;
    // Points where the function or its derivative jumps.
    std::vector<double> breaks(Side side) const;
    // Widest panel on which the function itself is resolved by 20-point Gauss rules.
    double resolution(Side side) const noexcept;
    // Symmetric index radius beyond which lattice samples are negligible (or zero).
    long sample_radius(Side side) const noexcept;

private:
    struct Table;

    SeedFunction() = default;
    void normalize(double norm_tol);
    double measure_norm() const;

    SeedFamily family_ = SeedFamily::Gaussian;
    double param_ = 0.0;
    double scale_ = 1.0;
    double raw_norm_ = 1.0;
    std::optional<std::string> warning_;
    std::shared_ptr<const Table> table_;
};

cplx eval_seed(const SeedFunction& seed, double x);
cplx eval_seed_ft(const SeedFunction& seed, double p);
// {hhat(n a)} for n in [-n_max, n_max].
std::vector<cplx> lattice_samples(const SeedFunction& seed, long n_max);

}  // namespace mraseed
