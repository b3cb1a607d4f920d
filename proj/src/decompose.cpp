#include "gvc/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "gvc/errors.hpp"

namespace gvc {

namespace {

// Cross-border sales of node i for exporter country s: intermediates to
// foreign nodes plus final demand from foreign countries. Summed in node
// order, then destination order, so results are reproducible.
double node_exports(const IcioTable& table, int i, int s) {
    const int m = table.node_count();
    const int g = table.country_count();
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
        if (table.node_country(j) != s) {
            total += table.intermediates()(i, j);
        }
    }
    for (int r = 0; r < g; ++r) {
        if (r != s) {
            total += table.final_demand()(i, r);
        }
    }
    return total;
}

Eigen::MatrixXd export_matrix(const IcioTable& table) {
    const int m = table.node_count();
    const int g = table.country_count();
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(m, g);
    for (int s = 0; s < g; ++s) {
        for (int i : table.country_nodes(s)) {
            e(i, s) = node_exports(table, i, s);
        }
    }
    return e;
}

// Aggregates node-level VA requirements into the country-origin matrix:
// VAX(t,s) = sum_{i in t} sum_{j in s} W(i,j) e_s(j), fixed node order.
VaOriginMatrix aggregate_origin(const IcioTable& table, const Eigen::MatrixXd& weighted,
                                const Eigen::MatrixXd& exports) {
    const int m = table.node_count();
    const int g = table.country_count();
    VaOriginMatrix out;
    out.countries = table.countries();
    out.vax = Eigen::MatrixXd::Zero(g, g);
    out.gross_exports.assign(static_cast<std::size_t>(g), 0.0);

    for (int s = 0; s < g; ++s) {
        for (int j : table.country_nodes(s)) {
            const double ej = exports(j, s);
            if (ej == 0.0) {
                continue;
            }
            for (int i = 0; i < m; ++i) {
                out.vax(table.node_country(i), s) += weighted(i, j) * ej;
            }
            out.gross_exports[static_cast<std::size_t>(s)] += ej;
        }
    }
    return out;
}

ExportDecomposition read_decomposition(const VaOriginMatrix& vax, int s) {
    const int g = static_cast<int>(vax.countries.size());
    ExportDecomposition d;
    d.country = vax.countries[static_cast<std::size_t>(s)];
    d.gross_exports = vax.gross_exports[static_cast<std::size_t>(s)];
    d.dva = vax.vax(s, s);
    for (int t = 0; t < g; ++t) {
        if (t != s) {
            d.fva += vax.vax(t, s);
        }
    }
    for (int r = 0; r < g; ++r) {
        if (r != s) {
            d.dvx += vax.vax(s, r);
        }
    }
    if (d.gross_exports == 0.0) {
        d.no_exports = true; // shares reported as 0, not NaN
    } else {
        d.backward_share = d.fva / d.gross_exports;
        d.forward_share = d.dvx / d.gross_exports;
        d.gvc_share = d.backward_share + d.forward_share;
    }
    return d;
}

} // namespace

int VaOriginMatrix::index_of(std::string_view country) const {
    for (std::size_t i = 0; i < countries.size(); ++i) {
        if (countries[i] == country) {
            return static_cast<int>(i);
        }
    }
    throw LookupError("unknown country code '" + std::string(country) + "'");
}

LinkageSystem LinkageSystem::build(const IcioTable& table) {
    LinkageSystem system;
    system.table_ = &table;
    system.coeffs_ = technical_coefficients(table);
    system.leontief_ = leontief_inverse(system.coeffs_, table);
    system.weighted_ = system.coeffs_.v.asDiagonal() * system.leontief_.b;
    return system;
}

ExportVector gross_exports(const IcioTable& table, std::string_view country) {
    const int s = table.country_index(country);
    ExportVector out;
    out.country = std::string(country);
    out.e = Eigen::VectorXd::Zero(table.node_count());
    for (int i : table.country_nodes(s)) {
        out.e(i) = node_exports(table, i, s);
        out.total += out.e(i);
    }
    return out;
}

VaOriginMatrix va_origin_matrix(const LinkageSystem& system) {
    const IcioTable& table = system.table();
    return aggregate_origin(table, system.va_requirements(), export_matrix(table));
}

VaOriginMatrix va_origin_matrix(const IcioTable& table) {
    return va_origin_matrix(LinkageSystem::build(table));
}

ExportDecomposition decompose_from_origin(const VaOriginMatrix& vax, std::string_view country) {
    return read_decomposition(vax, vax.index_of(country));
}

ExportDecomposition decompose_exports(const LinkageSystem& system, std::string_view country) {
    system.table().country_index(country); // surface lookup errors first
    return decompose_from_origin(va_origin_matrix(system), country);
}

ExportDecomposition decompose_exports(const IcioTable& table, std::string_view country) {
    table.country_index(country);
    return decompose_from_origin(va_origin_matrix(table), country);
}

std::vector<ParticipationPoint> participation_series(const std::vector<IcioTable>& tables) {
    std::set<std::string> universe;
    std::map<int, const IcioTable*> by_year;
    for (const IcioTable& table : tables) {
        if (!by_year.emplace(table.year(), &table).second) {
            throw InputError("duplicate table for year " + std::to_string(table.year()));
        }
        universe.insert(table.countries().begin(), table.countries().end());
    }

    std::map<int, VaOriginMatrix> origins;
    for (const auto& [year, table] : by_year) {
        origins.emplace(year, va_origin_matrix(*table));
    }

    std::vector<ParticipationPoint> series;
    for (const std::string& country : universe) {
        for (const auto& [year, table] : by_year) {
            ParticipationPoint point;
            point.country = country;
            point.year = year;
            if (table->has_country(country)) {
                point.decomposition = decompose_from_origin(origins.at(year), country);
            }
            series.push_back(std::move(point));
        }
    }
    return series;
}

std::string_view to_string(Attribution mode) {
    return mode == Attribution::ExportProduct ? "export-product" : "va-origin";
}

bool parse_attribution(std::string_view token, Attribution& out) {
    if (token == "export-product") {
        out = Attribution::ExportProduct;
    } else if (token == "va-origin") {
        out = Attribution::VaOrigin;
    } else {
        return false;
    }
    return true;
}

std::map<SectorGroup, GroupDva> dva_by_group(const LinkageSystem& system,
                                             std::string_view country, Attribution mode) {
    const IcioTable& table = system.table();
    const int s = table.country_index(country);
    const Eigen::MatrixXd& weighted = system.va_requirements();

    std::map<SectorGroup, GroupDva> groups;
    double total = 0.0;
    for (int j : table.country_nodes(s)) {
        const double ej = node_exports(table, j, s);
        if (ej == 0.0) {
            continue;
        }
        for (int i : table.country_nodes(s)) {
            const double amount = weighted(i, j) * ej;
            const SectorGroup key =
                mode == Attribution::ExportProduct ? table.node(j).group : table.node(i).group;
            groups[key].amount += amount;
            total += amount;
        }
    }
    if (total != 0.0) {
        for (auto& [group, entry] : groups) {
            entry.share = entry.amount / total;
        }
    }
    return groups;
}

std::map<SectorGroup, GroupDva> dva_by_group(const IcioTable& table, std::string_view country,
                                             Attribution mode) {
    return dva_by_group(LinkageSystem::build(table), country, mode);
}

double backward_manufacturing_share(const LinkageSystem& system, std::string_view country) {
    const IcioTable& table = system.table();
    const int s = table.country_index(country);
    const Eigen::MatrixXd& weighted = system.va_requirements();
    const int m = table.node_count();

    double fva_manuf = 0.0;
    double total_exports = 0.0;
    for (int j : table.country_nodes(s)) {
        const double ej = node_exports(table, j, s);
        total_exports += ej;
        if (ej == 0.0 || table.node(j).group != SectorGroup::Manufacturing) {
            continue;
        }
        for (int i = 0; i < m; ++i) {
            if (table.node_country(i) != s) {
                fva_manuf += weighted(i, j) * ej;
            }
        }
    }
    return total_exports == 0.0 ? 0.0 : fva_manuf / total_exports;
}

double backward_manufacturing_share(const IcioTable& table, std::string_view country) {
    return backward_manufacturing_share(LinkageSystem::build(table), country);
}

VaTraceResult oracle_va_trace(const IcioTable& table, int truncation_order) {
    if (truncation_order < 0) {
        throw InputError("truncation order must be nonnegative");
    }
    const TechCoefficients coeffs = technical_coefficients(table);
    const int m = table.node_count();

    double rho = 0.0;
    for (int j = 0; j < m; ++j) {
        rho = std::max(rho, coeffs.a.col(j).sum());
    }
    if (rho >= 1.0) {
        throw DivergenceError("power series diverges: max column sum " + std::to_string(rho));
    }

    // sum_{k<=K} A^k, built by plain repeated multiplication. This is the
    // verification path; it must not touch the solved inverse.
    Eigen::MatrixXd series = Eigen::MatrixXd::Identity(m, m);
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(m, m);
    for (int k = 1; k <= truncation_order; ++k) {
        power = coeffs.a * power;
        series += power;
    }

    const Eigen::MatrixXd exports = export_matrix(table);
    const int g = table.country_count();

    VaTraceResult result;
    result.spectral_cap = rho;
    result.vax.countries = table.countries();
    result.vax.vax = Eigen::MatrixXd::Zero(g, g);
    result.vax.gross_exports.assign(static_cast<std::size_t>(g), 0.0);
    for (int s = 0; s < g; ++s) {
        for (int j : table.country_nodes(s)) {
            const double ej = exports(j, s);
            result.vax.gross_exports[static_cast<std::size_t>(s)] += ej;
            if (ej == 0.0) {
                continue;
            }
            for (int i = 0; i < m; ++i) {
                result.vax.vax(table.node_country(i), s) += coeffs.v(i) * series(i, j) * ej;
            }
        }
    }

    const double v_max = coeffs.v.size() > 0 ? coeffs.v.cwiseAbs().maxCoeff() : 0.0;
    const double geometric_tail =
        rho > 0.0 ? v_max * std::pow(rho, truncation_order + 1) / (1.0 - rho) : 0.0;
    result.tail_bounds.reserve(static_cast<std::size_t>(g));
    for (int s = 0; s < g; ++s) {
        result.tail_bounds.push_back(geometric_tail *
                                     result.vax.gross_exports[static_cast<std::size_t>(s)]);
    }
    return result;
}

} // namespace gvc
