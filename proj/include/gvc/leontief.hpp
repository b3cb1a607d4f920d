#pragma once

#include <Eigen/Dense>

#include "gvc/coefficients.hpp"
#include "gvc/table.hpp"

namespace gvc {

// B = (I - A)^-1, the total requirements matrix.
struct LeontiefInverse {
    Eigen::MatrixXd b;
    double residual_norm = 0.0; // max-abs entry of (I - A) B - I
};

inline constexpr double kLeontiefResidualTolerance = 1e-8;

// Dense LU solve of (I - A) B = I. Requires Hawkins-Simon viability: every
// column sum of A strictly below 1. Throws ViabilityError naming the
// offending nodes otherwise, and ConditioningError when the verified
// residual exceeds tolerance. `table` supplies node names for diagnostics.
LeontiefInverse leontief_inverse(const TechCoefficients& coeffs, const IcioTable& table);

} // namespace gvc
