#include "gvc/coefficients.hpp"

namespace gvc {

TechCoefficients technical_coefficients(const IcioTable& table) {
    const int m = table.node_count();
    TechCoefficients out;
    out.a = Eigen::MatrixXd::Zero(m, m);
    out.v = Eigen::VectorXd::Zero(m);

    const Eigen::MatrixXd& z = table.intermediates();
    const Eigen::VectorXd& va = table.value_added();
    const Eigen::VectorXd& x = table.gross_output();

    for (int j = 0; j < m; ++j) {
        if (x(j) == 0.0) {
            out.zero_output_nodes.push_back(j);
            continue; // 0/0 -> 0: column stays zero, v_j stays zero
        }
        for (int i = 0; i < m; ++i) {
            out.a(i, j) = z(i, j) / x(j);
        }
        out.v(j) = va(j) / x(j);
    }
    return out;
}

} // namespace gvc
