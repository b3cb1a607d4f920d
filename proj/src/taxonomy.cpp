#include "gvc/taxonomy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "gvc/errors.hpp"

namespace gvc {

namespace {

constexpr double kShareSumSlack = 1e-9;

void require_share(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw InputError(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
    }
}

void require_nonnegative(double value, const char* name) {
    if (!(value >= 0.0)) {
        throw InputError(std::string(name) + " must be nonnegative, got " + std::to_string(value));
    }
}

double operand(const RuleCheck& check, std::string_view name) {
    for (const auto& [key, value] : check.operands) {
        if (key == name) {
            return value;
        }
    }
    throw InputError("trace record for rule '" + std::string(to_string(check.rule)) +
                     "' is missing operand '" + std::string(name) + "'");
}

// Predicates over recorded operands only; classify and replay_trace share
// them so a replay is an actual re-evaluation.
bool evaluate_check(const RuleCheck& check) {
    switch (check.rule) {
    case RuleId::CommoditiesGate:
        return operand(check, "manuf_dva_share") < operand(check, "manuf_dva_max") &&
               operand(check, "backward_manuf_share") < operand(check, "backward_manuf_max");
    case RuleId::PrimaryLow:
        return operand(check, "primary_dva_share") < operand(check, "primary_low_max");
    case RuleId::PrimaryHigh:
        return operand(check, "primary_dva_share") >= operand(check, "primary_high_min");
    case RuleId::PrimaryMid:
        return operand(check, "primary_dva_share") >= operand(check, "primary_low_max") &&
               operand(check, "primary_dva_share") < operand(check, "primary_high_min");
    case RuleId::Innovative:
        return operand(check, "ip_receipts_pct_gdp") >= operand(check, "ip_min") &&
               operand(check, "rd_pct_gdp") >= operand(check, "rd_min");
    case RuleId::Advanced:
        return operand(check, "manuf_biz_dva_share") >= operand(check, "advanced_min");
    case RuleId::Residual:
        return true;
    }
    throw InputError("trace record with unknown rule id");
}

RuleCheck record(std::vector<RuleCheck>& trace, RuleId rule,
                 std::vector<std::pair<std::string, double>> operands,
                 std::optional<Bucket> selects) {
    RuleCheck check{rule, std::move(operands), false, selects};
    check.verdict = evaluate_check(check);
    trace.push_back(check);
    return check;
}

} // namespace

CountryIndicators CountryIndicators::make(std::string country, int year, double manuf_dva_share,
                                          double biz_services_dva_share, double primary_dva_share,
                                          double backward_manuf_share, double ip_receipts_pct_gdp,
                                          double rd_pct_gdp, std::uint64_t population,
                                          bool no_exports) {
    require_share(manuf_dva_share, "manuf_dva_share");
    require_share(biz_services_dva_share, "biz_services_dva_share");
    require_share(primary_dva_share, "primary_dva_share");
    require_share(backward_manuf_share, "backward_manuf_share");
    require_nonnegative(ip_receipts_pct_gdp, "ip_receipts_pct_gdp");
    require_nonnegative(rd_pct_gdp, "rd_pct_gdp");
    if (manuf_dva_share + biz_services_dva_share + primary_dva_share > 1.0 + kShareSumSlack) {
        throw InputError("group DVA shares for " + country + " sum beyond 1");
    }
    return CountryIndicators{std::move(country),    year,
                             manuf_dva_share,       biz_services_dva_share,
                             primary_dva_share,     backward_manuf_share,
                             ip_receipts_pct_gdp,   rd_pct_gdp,
                             population,            no_exports};
}

SizeClass size_class(std::uint64_t population, const SizeCutoffs& cutoffs) {
    if (cutoffs.small_max == 0 || cutoffs.small_max >= cutoffs.large_min) {
        throw ConfigError("size cutoffs must be strictly increasing and positive");
    }
    if (population < cutoffs.small_max) {
        return SizeClass::Small;
    }
    if (population >= cutoffs.large_min) {
        return SizeClass::Large;
    }
    return SizeClass::Medium;
}

BucketAssignment classify(const CountryIndicators& ind, SizeClass size,
                          const TaxonomyThresholds& thresholds) {
    BucketAssignment assignment;
    assignment.country = ind.country;
    assignment.year = ind.year;
    assignment.size = size;
    auto& trace = assignment.trace;

    double backward_max = thresholds.commodities_backward_large_max;
    if (size == SizeClass::Small) {
        backward_max = thresholds.commodities_backward_small_max;
    } else if (size == SizeClass::Medium) {
        backward_max = thresholds.commodities_backward_medium_max;
    }

    const RuleCheck gate = record(trace, RuleId::CommoditiesGate,
                                  {{"manuf_dva_share", ind.manuf_dva_share},
                                   {"manuf_dva_max", thresholds.commodities_manuf_dva_max},
                                   {"backward_manuf_share", ind.backward_manuf_share},
                                   {"backward_manuf_max", backward_max}},
                                  std::nullopt);
    if (gate.verdict) {
        const RuleCheck low = record(trace, RuleId::PrimaryLow,
                                     {{"primary_dva_share", ind.primary_dva_share},
                                      {"primary_low_max", thresholds.primary_low_max}},
                                     Bucket::LowParticipation);
        if (low.verdict) {
            assignment.bucket = Bucket::LowParticipation;
            return assignment;
        }
        const RuleCheck high = record(trace, RuleId::PrimaryHigh,
                                      {{"primary_dva_share", ind.primary_dva_share},
                                       {"primary_high_min", thresholds.primary_high_min}},
                                      Bucket::HighCommodities);
        if (high.verdict) {
            assignment.bucket = Bucket::HighCommodities;
            return assignment;
        }
        record(trace, RuleId::PrimaryMid,
               {{"primary_dva_share", ind.primary_dva_share},
                {"primary_low_max", thresholds.primary_low_max},
                {"primary_high_min", thresholds.primary_high_min}},
               Bucket::LimitedCommodities);
        assignment.bucket = Bucket::LimitedCommodities;
        return assignment;
    }

    const double ip_min = size == SizeClass::Small ? thresholds.innovative_small_ip_min
                                                   : thresholds.innovative_medium_large_ip_min;
    const double rd_min = size == SizeClass::Small ? thresholds.innovative_small_rd_min
                                                   : thresholds.innovative_medium_large_rd_min;
    const RuleCheck innovative = record(trace, RuleId::Innovative,
                                        {{"ip_receipts_pct_gdp", ind.ip_receipts_pct_gdp},
                                         {"ip_min", ip_min},
                                         {"rd_pct_gdp", ind.rd_pct_gdp},
                                         {"rd_min", rd_min}},
                                        Bucket::InnovativeActivities);
    if (innovative.verdict) {
        assignment.bucket = Bucket::InnovativeActivities;
        return assignment;
    }

    const RuleCheck advanced =
        record(trace, RuleId::Advanced,
               {{"manuf_biz_dva_share", ind.manuf_dva_share + ind.biz_services_dva_share},
                {"advanced_min", thresholds.advanced_manuf_services_min}},
               Bucket::AdvancedManufServices);
    if (advanced.verdict) {
        assignment.bucket = Bucket::AdvancedManufServices;
        return assignment;
    }

    record(trace, RuleId::Residual, {}, Bucket::LimitedManufacturing);
    assignment.bucket = Bucket::LimitedManufacturing;
    return assignment;
}

Bucket replay_trace(const std::vector<RuleCheck>& trace) {
    if (trace.empty()) {
        throw InputError("cannot replay an empty trace");
    }
    for (const RuleCheck& check : trace) {
        const bool verdict = evaluate_check(check);
        if (verdict != check.verdict) {
            throw InputError("trace verdict mismatch at rule '" +
                             std::string(to_string(check.rule)) + "'");
        }
        if (verdict && check.selects) {
            return *check.selects;
        }
    }
    throw InputError("trace selects no bucket");
}

std::vector<BucketAssignment> classify_panel(const std::vector<CountryIndicators>& panel,
                                             const TaxonomyConfig& config) {
    std::set<std::pair<std::string, int>> seen;
    for (const CountryIndicators& row : panel) {
        if (!seen.insert({row.country, row.year}).second) {
            throw InputError("duplicate panel row for (" + row.country + ", " +
                             std::to_string(row.year) + ")");
        }
    }

    std::vector<BucketAssignment> assignments;
    assignments.reserve(panel.size());
    for (const CountryIndicators& row : panel) {
        assignments.push_back(
            classify(row, size_class(row.population, config.cutoffs), config.thresholds));
    }
    std::sort(assignments.begin(), assignments.end(),
              [](const BucketAssignment& a, const BucketAssignment& b) {
                  return std::tie(a.country, a.year) < std::tie(b.country, b.year);
              });
    return assignments;
}

std::vector<TransitionReport> transitions(const std::vector<BucketAssignment>& assignments) {
    std::map<std::string, std::vector<std::pair<int, Bucket>>> steps_by_country;
    for (const BucketAssignment& a : assignments) {
        steps_by_country[a.country].emplace_back(a.year, a.bucket);
    }

    std::vector<TransitionReport> reports;
    reports.reserve(steps_by_country.size());
    for (auto& [country, steps] : steps_by_country) {
        std::sort(steps.begin(), steps.end());
        for (std::size_t i = 1; i < steps.size(); ++i) {
            if (steps[i].first == steps[i - 1].first) {
                throw InputError("duplicate assignment for (" + country + ", " +
                                 std::to_string(steps[i].first) + ")");
            }
        }
        TransitionReport report;
        report.country = country;
        report.steps = steps;
        for (std::size_t i = 1; i < steps.size(); ++i) {
            if (steps[i].second != steps[i - 1].second) {
                report.moves.push_back({steps[i - 1].second, steps[i].second,
                                        steps[i - 1].first, steps[i].first});
            }
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

IndicatorPanelResult indicators_from_table(const IcioTable& table,
                                           const std::vector<ExternalIndicatorRow>& external) {
    std::map<std::string, const ExternalIndicatorRow*> external_by_country;
    for (const ExternalIndicatorRow& row : external) {
        if (row.year != table.year()) {
            continue;
        }
        if (!external_by_country.emplace(row.country, &row).second) {
            throw InputError("duplicate external indicators for (" + row.country + ", " +
                             std::to_string(row.year) + ")");
        }
    }

    const LinkageSystem system = LinkageSystem::build(table);

    IndicatorPanelResult result;
    for (int s = 0; s < table.country_count(); ++s) {
        const std::string& country = table.country(s);
        auto it = external_by_country.find(country);
        if (it == external_by_country.end()) {
            result.gaps.push_back({country, table.year(), "missing external indicators"});
            continue;
        }

        const auto groups = dva_by_group(system, country, Attribution::ExportProduct);
        auto share_of = [&groups](SectorGroup g) {
            auto entry = groups.find(g);
            return entry == groups.end() ? 0.0 : entry->second.share;
        };
        // Group shares come out of the same fixed-order sums as the DVA
        // identity, so they can poke above 1 by an ulp; clamp for the
        // indicator invariants.
        auto clamp_share = [](double v) { return std::clamp(v, 0.0, 1.0); };

        const double exports = gross_exports(table, country).total;
        result.indicators.push_back(CountryIndicators::make(
            country, table.year(), clamp_share(share_of(SectorGroup::Manufacturing)),
            clamp_share(share_of(SectorGroup::BusinessServices)),
            clamp_share(share_of(SectorGroup::Primary)),
            clamp_share(backward_manufacturing_share(system, country)),
            it->second->ip_receipts_pct_gdp, it->second->rd_pct_gdp, it->second->population,
            exports == 0.0));
    }
    return result;
}

std::string_view to_string(Bucket bucket) {
    switch (bucket) {
    case Bucket::LowParticipation:
        return "low_participation";
    case Bucket::LimitedCommodities:
        return "limited_commodities";
    case Bucket::HighCommodities:
        return "high_commodities";
    case Bucket::LimitedManufacturing:
        return "limited_manufacturing";
    case Bucket::AdvancedManufServices:
        return "advanced_manufacturing_services";
    case Bucket::InnovativeActivities:
        return "innovative_activities";
    }
    return "limited_manufacturing";
}

std::string_view to_string(SizeClass size) {
    switch (size) {
    case SizeClass::Small:
        return "small";
    case SizeClass::Medium:
        return "medium";
    case SizeClass::Large:
        return "large";
    }
    return "small";
}

std::string_view to_string(RuleId rule) {
    switch (rule) {
    case RuleId::CommoditiesGate:
        return "commodities_gate";
    case RuleId::PrimaryLow:
        return "primary_low";
    case RuleId::PrimaryHigh:
        return "primary_high";
    case RuleId::PrimaryMid:
        return "primary_mid";
    case RuleId::Innovative:
        return "innovative";
    case RuleId::Advanced:
        return "advanced";
    case RuleId::Residual:
        return "residual";
    }
    return "residual";
}

bool parse_bucket(std::string_view token, Bucket& out) {
    for (int i = 0; i < kBucketCount; ++i) {
        const Bucket bucket = static_cast<Bucket>(i);
        if (token == to_string(bucket)) {
            out = bucket;
            return true;
        }
    }
    return false;
}

} // namespace gvc
