#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "gvc/table.hpp"
#include "gvc/taxonomy.hpp"

namespace gvc {

// Parameters of the synthetic-economy generator. Same seed, same table,
// down to the last bit.
struct SynthParams {
    int countries = 2;           // G >= 1
    int sectors_per_country = 1; // N >= 1
    std::uint64_t seed = 0;
    double openness = 0.25;      // cross-border intermediate intensity, [0, 0.5]
    double max_col_sum = 0.7;    // cap on column sums of A, (0, 0.9]
    int year = 2000;

    void validate() const; // throws ConfigError
};

// Builds a balanced economy from a technology draw: columns of A are
// rescaled to random sums below max_col_sum with the cross-border mass
// fraction set by openness, final demand is drawn positive with the same
// split, then x = B f, Z = A x-hat and va = (1 - colsum(A)) x. The result
// passes strict validation by construction.
IcioTable synth_economy(const SynthParams& params);

// Assembles a balanced table from explicit technology and final demand;
// the synthesis path above and several test fixtures are built on this.
IcioTable assemble_economy(std::vector<Node> nodes, const Eigen::MatrixXd& coefficients,
                           const Eigen::MatrixXd& final_demand, int year);

// Deterministic external indicators (population, innovation fields) for the
// countries of a synthetic table. Draws continue the per-year stream, so a
// (seed, year) pair pins the whole dataset.
std::vector<ExternalIndicatorRow> synth_indicators(const SynthParams& params,
                                                   const IcioTable& table);

// Stable per-year seed derivation for multi-year synthetic datasets.
std::uint64_t year_seed(std::uint64_t base_seed, int year);

} // namespace gvc
