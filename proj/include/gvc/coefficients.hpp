#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gvc/table.hpp"

namespace gvc {

// Technology of the economy: A(i,j) = Z(i,j) / x_j is intermediate input per
// unit of output of node j, v_j = va_j / x_j the value-added coefficient.
// For a balanced table, colsum_j(A) + v_j == 1 at every producing node.
struct TechCoefficients {
    Eigen::MatrixXd a;
    Eigen::VectorXd v;
    std::vector<int> zero_output_nodes; // columns zeroed by the 0/0 -> 0 rule
};

// Divides by gross output with the 0/0 -> 0 convention; dormant nodes are
// recorded in zero_output_nodes rather than treated as errors.
TechCoefficients technical_coefficients(const IcioTable& table);

} // namespace gvc
