// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mraseed {

// Invalid parameters, malformed seed strings or files.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Point evaluation of a seed could not reach its accuracy target.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double error_bound);
    double error_bound() const noexcept { return error_bound_; }

private:
    double error_bound_;
};

// A quadrature did not converge to the requested tolerance.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double residual);
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// The spectral series is not strictly positive, so 1/sqrt(S) is undefined.
class PositivityError : public std::runtime_error {
public:
    PositivityError(const std::string& what, double min_value, double min_location);
    double min_value() const noexcept { return min_value_; }
    double min_location() const noexcept { return min_location_; }

private:
    double min_value_;
    double min_location_;
};

// Seed norm too far from 1 to be rescaled silently.
class NormalizationError : public std::runtime_error {
public:
    NormalizationError(const std::string& what, double norm);
    double norm() const noexcept { return norm_; }

private:
    double norm_;
};

}  // namespace mraseed
