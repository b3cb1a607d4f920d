#include "gvc/validate.hpp"

#include <algorithm>
#include <cmath>

namespace gvc {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::RowBalance:
        return "row-balance";
    case ViolationKind::ColumnBalance:
        return "column-balance";
    case ViolationKind::NegativeOutput:
        return "negative-output";
    case ViolationKind::NegativeValueAdded:
        return "negative-value-added";
    case ViolationKind::NegativeIntermediate:
        return "negative-intermediate";
    case ViolationKind::NegativeFinal:
        return "negative-final";
    }
    return "unknown";
}

ValidationReport validate_table(const IcioTable& table, ValidationMode mode,
                                double balance_tolerance) {
    ValidationReport report;
    report.mode = mode;
    report.balance_tolerance = balance_tolerance;

    const int m = table.node_count();
    const int g = table.country_count();
    const Eigen::MatrixXd& z = table.intermediates();
    const Eigen::MatrixXd& f = table.final_demand();
    const Eigen::VectorXd& va = table.value_added();
    const Eigen::VectorXd& x = table.gross_output();

    for (int i = 0; i < m; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < m; ++j) {
            row_sum += z(i, j);
        }
        for (int r = 0; r < g; ++r) {
            row_sum += f(i, r);
        }
        const double scale = std::max(std::abs(x(i)), 1.0);
        const double residual = std::abs(x(i) - row_sum) / scale;
        if (residual > balance_tolerance) {
            report.violations.push_back({ViolationKind::RowBalance, table.node(i).id, residual});
        }
    }

    for (int j = 0; j < m; ++j) {
        double col_sum = va(j);
        for (int i = 0; i < m; ++i) {
            col_sum += z(i, j);
        }
        const double scale = std::max(std::abs(x(j)), 1.0);
        const double residual = std::abs(x(j) - col_sum) / scale;
        if (residual > balance_tolerance) {
            report.violations.push_back({ViolationKind::ColumnBalance, table.node(j).id, residual});
        }
    }

    for (int i = 0; i < m; ++i) {
        if (x(i) < 0.0) {
            report.violations.push_back({ViolationKind::NegativeOutput, table.node(i).id, x(i)});
        }
        if (va(i) < 0.0) {
            report.violations.push_back(
                {ViolationKind::NegativeValueAdded, table.node(i).id, va(i)});
        }
    }

    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (z(i, j) < 0.0) {
                Violation v{ViolationKind::NegativeIntermediate,
                            table.node(i).id + "->" + table.node(j).id, z(i, j)};
                if (mode == ValidationMode::Strict) {
                    report.violations.push_back(v);
                } else {
                    report.warnings.push_back(v);
                }
            }
        }
    }

    if (mode == ValidationMode::Strict) {
        for (int i = 0; i < m; ++i) {
            for (int r = 0; r < g; ++r) {
                if (f(i, r) < 0.0) {
                    report.violations.push_back({ViolationKind::NegativeFinal,
                                                 table.node(i).id + "->" + table.country(r),
                                                 f(i, r)});
                }
            }
        }
    }

    return report;
}

} // namespace gvc
