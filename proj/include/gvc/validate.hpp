#pragma once

#include <string>
#include <vector>

#include "gvc/table.hpp"

namespace gvc {

// Strict mode rejects every negative entry. Lenient mode permits negative
// final demand (inventory drawdowns) and downgrades negative intermediate
// flows to warnings, matching how published MRIO extracts behave.
enum class ValidationMode { Strict, Lenient };

enum class ViolationKind {
    RowBalance,
    ColumnBalance,
    NegativeOutput,
    NegativeValueAdded,
    NegativeIntermediate,
    NegativeFinal,
};

struct Violation {
    ViolationKind kind;
    std::string node;  // node id, or "node/dest" for final-demand cells
    double magnitude;  // relative residual for balances, cell value for signs
};

struct ValidationReport {
    ValidationMode mode = ValidationMode::Strict;
    double balance_tolerance = 1e-6;
    std::vector<Violation> violations;
    std::vector<Violation> warnings;

    bool ok() const { return violations.empty(); }
};

inline constexpr double kDefaultBalanceTolerance = 1e-6;

std::string_view to_string(ViolationKind kind);

// Checks the row/column balance identities and sign constraints. Balance
// residuals are relative per node, denominated by max(|x_i|, 1). Structural
// defects (wrong dimensions) throw from IcioTable construction, so the
// report only ever carries value-level findings. Two calls on the same
// table produce identical reports.
ValidationReport validate_table(const IcioTable& table, ValidationMode mode,
                                double balance_tolerance = kDefaultBalanceTolerance);

} // namespace gvc
