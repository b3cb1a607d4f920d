#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "gvc/leontief.hpp"
#include "gvc/table.hpp"

namespace gvc {

// Gross exports of one country: per-node cross-border intermediate sales
// plus cross-border final sales. Entries outside the country are zero.
struct ExportVector {
    std::string country;
    Eigen::VectorXd e;   // length M
    double total = 0.0;  // fixed summation order over nodes
};

// Sink-based value-added decomposition of one country's gross exports.
//   dva: own value added in own exports        (dva + fva == gross_exports)
//   fva: foreign value added in own exports    (backward participation)
//   dvx: own value added in partners' exports  (forward participation)
struct ExportDecomposition {
    std::string country;
    double dva = 0.0;
    double fva = 0.0;
    double dvx = 0.0;
    double gross_exports = 0.0;
    double backward_share = 0.0; // fva / gross_exports, 0 when no exports
    double forward_share = 0.0;  // dvx / gross_exports
    double gvc_share = 0.0;      // backward + forward
    bool no_exports = false;
};

// VAX(t,s) = value added originating in country t embodied in country s's
// gross exports. Column sums reproduce gross exports (v'B = 1' identity).
struct VaOriginMatrix {
    std::vector<std::string> countries; // row/column order
    Eigen::MatrixXd vax;                // G x G
    std::vector<double> gross_exports;  // per exporting country

    int index_of(std::string_view country) const; // throws LookupError
};

// Precomputed v-hat-B machinery shared by the per-country operations.
// Building it runs technical_coefficients and leontief_inverse once.
class LinkageSystem {
  public:
    static LinkageSystem build(const IcioTable& table);

    const IcioTable& table() const { return *table_; }
    const TechCoefficients& coefficients() const { return coeffs_; }
    const LeontiefInverse& leontief() const { return leontief_; }
    const Eigen::MatrixXd& va_requirements() const { return weighted_; } // diag(v) * B

  private:
    const IcioTable* table_ = nullptr;
    TechCoefficients coeffs_;
    LeontiefInverse leontief_;
    Eigen::MatrixXd weighted_;
};

ExportVector gross_exports(const IcioTable& table, std::string_view country);

VaOriginMatrix va_origin_matrix(const LinkageSystem& system);
VaOriginMatrix va_origin_matrix(const IcioTable& table);

ExportDecomposition decompose_exports(const IcioTable& table, std::string_view country);
ExportDecomposition decompose_exports(const LinkageSystem& system, std::string_view country);

// Reads one country's row/column off a precomputed origin matrix.
ExportDecomposition decompose_from_origin(const VaOriginMatrix& vax, std::string_view country);

// One (country, year) point of the participation series. `decomposition`
// is empty when the country is missing from that year's table.
struct ParticipationPoint {
    std::string country;
    int year = 0;
    std::optional<ExportDecomposition> decomposition;
};

// Deterministic series over the union of country universes, ordered by
// country code then year. Gaps are explicit empty points.
std::vector<ParticipationPoint> participation_series(const std::vector<IcioTable>& tables);

// How DVA is attributed to sector groups: by the group of the exporting
// node (classification by export product) or by the group of the node
// where the value added originates.
enum class Attribution { ExportProduct, VaOrigin };

std::string_view to_string(Attribution mode);
bool parse_attribution(std::string_view token, Attribution& out);

struct GroupDva {
    double amount = 0.0;
    double share = 0.0; // of total DVA, 0 when the country has no DVA
};

std::map<SectorGroup, GroupDva> dva_by_group(const LinkageSystem& system,
                                             std::string_view country, Attribution mode);
std::map<SectorGroup, GroupDva> dva_by_group(const IcioTable& table,
                                             std::string_view country, Attribution mode);

// Foreign value added inside the country's manufacturing exports, as a
// share of its total exports. The taxonomy's backward-integration input.
double backward_manufacturing_share(const LinkageSystem& system, std::string_view country);
double backward_manufacturing_share(const IcioTable& table, std::string_view country);

// Power-series verification oracle: VAX computed with sum_{k<=K} A^k in
// place of the solved inverse. Independent of leontief_inverse.
struct VaTraceResult {
    VaOriginMatrix vax;
    double spectral_cap = 0.0;       // max column sum of A
    std::vector<double> tail_bounds; // per exporting country
};

VaTraceResult oracle_va_trace(const IcioTable& table, int truncation_order);

} // namespace gvc
