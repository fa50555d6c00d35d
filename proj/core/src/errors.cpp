// SPDX-License-Identifier: Apache-2.0
#include "mraseed/errors.hpp"

namespace mraseed {

EvaluationError::EvaluationError(const std::string& what, double error_bound)
    : std::runtime_error(what), error_bound_(error_bound) {}

IntegrationError::IntegrationError(const std::string& what, double residual)
    : std::runtime_error(what), residual_(residual) {}

PositivityError::PositivityError(const std::string& what, double min_value, double min_location)
    : std::runtime_error(what), min_value_(min_value), min_location_(min_location) {}

NormalizationError::NormalizationError(const std::string& what, double norm)
    : std::runtime_error(what), norm_(norm) {}

}  // namespace mraseed
