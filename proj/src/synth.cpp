#include "gvc/synth.hpp"

#include <cmath>
#include <random>
#include <string>

#include "gvc/errors.hpp"

namespace gvc {

namespace {

// Uniform draw in [0, 1) from explicit generator output. Distributions from
// <random> are implementation-defined, which would break the equal-seeds ==
// equal-bytes contract across standard libraries.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::string padded(const char prefix, int value) {
    std::string digits = std::to_string(value);
    if (digits.size() < 2) {
        digits.insert(digits.begin(), '0');
    }
    return prefix + digits;
}

constexpr SectorGroup kGroupCycle[] = {
    SectorGroup::Manufacturing, SectorGroup::Primary,       SectorGroup::BusinessServices,
    SectorGroup::OtherServices, SectorGroup::Other,
};

} // namespace

void SynthParams::validate() const {
    if (countries < 1) {
        throw ConfigError("countries must be >= 1");
    }
    if (sectors_per_country < 1) {
        throw ConfigError("sectors_per_country must be >= 1");
    }
    if (!(openness >= 0.0 && openness <= 0.5)) {
        throw ConfigError("openness must lie in [0, 0.5]");
    }
    if (!(max_col_sum > 0.0 && max_col_sum <= 0.9)) {
        throw ConfigError("max_col_sum must lie in (0, 0.9]");
    }
}

std::uint64_t year_seed(std::uint64_t base_seed, int year) {
    return splitmix64(base_seed + splitmix64(static_cast<std::uint64_t>(year)));
}

IcioTable assemble_economy(std::vector<Node> nodes, const Eigen::MatrixXd& coefficients,
                           const Eigen::MatrixXd& final_demand, int year) {
    const auto m = static_cast<Eigen::Index>(nodes.size());
    if (coefficients.rows() != m || coefficients.cols() != m) {
        throw StructuralError("coefficient matrix does not match the node list");
    }
    if (final_demand.rows() != m) {
        throw StructuralError("final-demand matrix does not match the node list");
    }
    for (Eigen::Index j = 0; j < m; ++j) {
        if (coefficients.col(j).sum() >= 1.0) {
            throw ConfigError("coefficient column sums must stay below 1");
        }
    }

    const Eigen::VectorXd f = final_demand.rowwise().sum();
    const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(m, m) - coefficients;
    const Eigen::VectorXd x = Eigen::PartialPivLU<Eigen::MatrixXd>(lhs).solve(f);

    Eigen::MatrixXd z(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        z.col(j) = coefficients.col(j) * x(j);
    }
    Eigen::VectorXd va(m);
    for (Eigen::Index j = 0; j < m; ++j) {
        va(j) = (1.0 - coefficients.col(j).sum()) * x(j);
    }
    return IcioTable(std::move(nodes), std::move(z), final_demand, std::move(va), x, year);
}

IcioTable synth_economy(const SynthParams& params) {
    params.validate();
    const int g = params.countries;
    const int n = params.sectors_per_country;
    const int m = g * n;

    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(m));
    for (int c = 0; c < g; ++c) {
        const std::string country = padded('C', c);
        for (int k = 0; k < n; ++k) {
            Node node;
            node.country = country;
            node.sector = padded('S', k);
            node.id = country + "_" + node.sector;
            node.group = kGroupCycle[k % 5];
            nodes.push_back(std::move(node));
        }
    }

    std::mt19937_64 rng(params.seed);
    auto country_of = [n](int i) { return i / n; };

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
    for (int j = 0; j < m; ++j) {
        const double col_sum = params.max_col_sum * (0.5 + 0.5 * next_unit(rng));
        Eigen::VectorXd weights(m);
        double domestic_weight = 0.0;
        double foreign_weight = 0.0;
        for (int i = 0; i < m; ++i) {
            weights(i) = 0.05 + 0.95 * next_unit(rng);
            if (country_of(i) == country_of(j)) {
                domestic_weight += weights(i);
            } else {
                foreign_weight += weights(i);
            }
        }
        const double cross_mass = g > 1 ? params.openness * col_sum : 0.0;
        const double domestic_mass = col_sum - cross_mass;
        for (int i = 0; i < m; ++i) {
            if (country_of(i) == country_of(j)) {
                a(i, j) = weights(i) / domestic_weight * domestic_mass;
            } else {
                a(i, j) = weights(i) / foreign_weight * cross_mass;
            }
        }
    }

    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(m, g);
    for (int i = 0; i < m; ++i) {
        for (int r = 0; r < g; ++r) {
            const double base = 20.0 + 80.0 * next_unit(rng);
            if (r == country_of(i)) {
                f(i, r) = g > 1 ? (1.0 - params.openness) * base : base;
            } else {
                f(i, r) = params.openness * base / (g - 1);
            }
        }
    }

    return assemble_economy(std::move(nodes), a, f, params.year);
}

std::vector<ExternalIndicatorRow> synth_indicators(const SynthParams& params,
                                                   const IcioTable& table) {
    std::mt19937_64 rng(splitmix64(params.seed ^ 0x1D1CA70B5ULL));
    std::vector<ExternalIndicatorRow> rows;
    rows.reserve(table.countries().size());
    for (const std::string& country : table.countries()) {
        ExternalIndicatorRow row;
        row.country = country;
        row.year = table.year();
        // population log-uniform over [1e6, 1.5e9]; innovation fields skewed
        // low so only a minority of draws clear the taxonomy gates
        row.population =
            static_cast<std::uint64_t>(std::floor(1.0e6 * std::pow(1500.0, next_unit(rng))));
        const double u_ip = next_unit(rng);
        const double u_rd = next_unit(rng);
        row.ip_receipts_pct_gdp = 0.4 * u_ip * u_ip;
        row.rd_pct_gdp = 3.0 * u_rd * u_rd;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace gvc
