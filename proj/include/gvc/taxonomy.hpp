#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gvc/decompose.hpp"
#include "gvc/table.hpp"

namespace gvc {

// Per country-year inputs to the classification. Shares are fractions in
// [0, 1]; the innovation fields are percentages of GDP. Constructing an
// out-of-range row throws InputError (make() enforces the invariants).
struct CountryIndicators {
    std::string country;
    int year = 0;
    double manuf_dva_share = 0.0;
    double biz_services_dva_share = 0.0;
    double primary_dva_share = 0.0;
    double backward_manuf_share = 0.0;
    double ip_receipts_pct_gdp = 0.0;
    double rd_pct_gdp = 0.0;
    std::uint64_t population = 0;
    bool no_exports = false;

    static CountryIndicators make(std::string country, int year, double manuf_dva_share,
                                  double biz_services_dva_share, double primary_dva_share,
                                  double backward_manuf_share, double ip_receipts_pct_gdp,
                                  double rd_pct_gdp, std::uint64_t population,
                                  bool no_exports = false);
};

enum class SizeClass { Small, Medium, Large };

// Population cutoffs: Small below `small_max`, Large at or above
// `large_min`, Medium between. Half-open on the left: a population exactly
// at `small_max` is Medium.
struct SizeCutoffs {
    std::uint64_t small_max = 10'000'000;
    std::uint64_t large_min = 40'000'000;
};

SizeClass size_class(std::uint64_t population, const SizeCutoffs& cutoffs);

// The six labels of the four-bucket taxonomy. The three commodities
// sub-buckets split on the primary-goods share.
enum class Bucket {
    LowParticipation,
    LimitedCommodities,
    HighCommodities,
    LimitedManufacturing,
    AdvancedManufServices,
    InnovativeActivities,
};

inline constexpr int kBucketCount = 6;

// Classification thresholds. Defaults reproduce the published taxonomy:
// commodities gate on manufacturing DVA share below 0.60 with backward
// manufacturing below 0.20 / 0.10 / 0.075 by country size, primary-share
// splits at 0.20 and 0.40, innovation gates at (0.15 ip, 1.5 rd) for small
// and (0.10, 1.0) for medium and large, advanced gate at 0.80. "Below" is
// strict, the innovation / advanced / upper primary gates are inclusive.
struct TaxonomyThresholds {
    double commodities_manuf_dva_max = 0.60;
    double commodities_backward_small_max = 0.20;
    double commodities_backward_medium_max = 0.10;
    double commodities_backward_large_max = 0.075;
    double primary_low_max = 0.20;
    double primary_high_min = 0.40;
    double innovative_small_ip_min = 0.15;
    double innovative_small_rd_min = 1.5;
    double innovative_medium_large_ip_min = 0.10;
    double innovative_medium_large_rd_min = 1.0;
    double advanced_manuf_services_min = 0.80;
};

enum class RuleId {
    CommoditiesGate,
    PrimaryLow,
    PrimaryHigh,
    PrimaryMid,
    Innovative,
    Advanced,
    Residual,
};

// One evaluated rule: the operands it saw, its verdict, and the bucket it
// selects when the verdict is true. Replaying a trace re-evaluates every
// predicate from the recorded operands alone.
struct RuleCheck {
    RuleId rule;
    std::vector<std::pair<std::string, double>> operands;
    bool verdict = false;
    std::optional<Bucket> selects;
};

struct BucketAssignment {
    std::string country;
    int year = 0;
    Bucket bucket = Bucket::LimitedManufacturing;
    SizeClass size = SizeClass::Small;
    std::vector<RuleCheck> trace;
};

// Rule precedence: commodities gate (with primary-share split), then
// innovative, then advanced, then the limited-manufacturing residual.
BucketAssignment classify(const CountryIndicators& indicators, SizeClass size,
                          const TaxonomyThresholds& thresholds);

// Recomputes the bucket using only the recorded operands. Throws
// InputError on malformed traces or verdict mismatches.
Bucket replay_trace(const std::vector<RuleCheck>& trace);

struct TaxonomyConfig {
    TaxonomyThresholds thresholds;
    SizeCutoffs cutoffs;
};

// Pointwise classification of a panel, output sorted by (country, year).
// Duplicate (country, year) rows throw InputError naming the duplicate.
std::vector<BucketAssignment> classify_panel(const std::vector<CountryIndicators>& panel,
                                             const TaxonomyConfig& config);

struct TransitionMove {
    Bucket from_bucket;
    Bucket to_bucket;
    int from_year = 0;
    int to_year = 0;
};

struct TransitionReport {
    std::string country;
    std::vector<std::pair<int, Bucket>> steps; // chronological
    std::vector<TransitionMove> moves;         // adjacent steps that differ
};

std::vector<TransitionReport> transitions(const std::vector<BucketAssignment>& assignments);

// Innovation and population data that cannot be derived from the table.
struct ExternalIndicatorRow {
    std::string country;
    int year = 0;
    double ip_receipts_pct_gdp = 0.0;
    double rd_pct_gdp = 0.0;
    std::uint64_t population = 0;
};

struct IndicatorGap {
    std::string country;
    int year = 0;
    std::string reason;
};

struct IndicatorPanelResult {
    std::vector<CountryIndicators> indicators;
    std::vector<IndicatorGap> gaps; // countries suppressed for missing data
};

// Derives the export-based indicator fields from the table (export-product
// attribution) and merges the external rows for the table's year. Countries
// without external data are suppressed and reported as gaps; countries
// without exports are kept with zero shares and flagged.
IndicatorPanelResult indicators_from_table(const IcioTable& table,
                                           const std::vector<ExternalIndicatorRow>& external);

std::string_view to_string(Bucket bucket);
std::string_view to_string(SizeClass size);
std::string_view to_string(RuleId rule);
bool parse_bucket(std::string_view token, Bucket& out);

} // namespace gvc
