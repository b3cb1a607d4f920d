#include "gvc/leontief.hpp"

#include <string>

#include "gvc/errors.hpp"

namespace gvc {

LeontiefInverse leontief_inverse(const TechCoefficients& coeffs, const IcioTable& table) {
    const Eigen::Index m = coeffs.a.rows();

    std::vector<std::string> non_viable;
    for (Eigen::Index j = 0; j < m; ++j) {
        if (coeffs.a.col(j).sum() >= 1.0) {
            non_viable.push_back(table.node(static_cast<int>(j)).id);
        }
    }
    if (!non_viable.empty()) {
        std::string msg = "system is not viable, column sums >= 1 at:";
        for (const auto& id : non_viable) {
            msg += " " + id;
        }
        throw ViabilityError(msg, std::move(non_viable));
    }

    const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(m, m) - coeffs.a;
    LeontiefInverse out;
    out.b = Eigen::PartialPivLU<Eigen::MatrixXd>(lhs).solve(Eigen::MatrixXd::Identity(m, m));
    out.residual_norm =
        (lhs * out.b - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
    if (out.residual_norm >= kLeontiefResidualTolerance) {
        throw ConditioningError("Leontief solve residual " + std::to_string(out.residual_norm) +
                                    " exceeds tolerance",
                                out.residual_norm);
    }
    return out;
}

} // namespace gvc
