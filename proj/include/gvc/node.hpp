#pragma once

#include <string>
#include <string_view>

namespace gvc {

// Sector aggregation used by the export-specialisation indicators.
// The mapping from raw sectors to groups is supplied by the input data,
// never inferred.
enum class SectorGroup {
    Primary,
    Manufacturing,
    BusinessServices,
    OtherServices,
    Other,
};

inline constexpr int kSectorGroupCount = 5;

// One country-sector position in the table. `id` is the key used by the
// on-disk formats; (country, sector) pairs are unique per table.
struct Node {
    std::string id;
    std::string country;
    std::string sector;
    SectorGroup group = SectorGroup::Other;
};

// Uppercase token charset shared by country codes, sector codes and node ids.
bool is_valid_code(std::string_view code);

std::string_view to_string(SectorGroup group);

// Parses the nodes.csv group token (e.g. "MANUFACTURING"). Returns false on
// unknown tokens.
bool parse_sector_group(std::string_view token, SectorGroup& out);

} // namespace gvc
