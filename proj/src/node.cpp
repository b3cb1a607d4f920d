#include "gvc/node.hpp"

namespace gvc {

bool is_valid_code(std::string_view code) {
    if (code.empty()) {
        return false;
    }
    for (char c : code) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
        if (!ok) {
            return false;
        }
    }
    return true;
}

std::string_view to_string(SectorGroup group) {
    switch (group) {
    case SectorGroup::Primary:
        return "PRIMARY";
    case SectorGroup::Manufacturing:
        return "MANUFACTURING";
    case SectorGroup::BusinessServices:
        return "BUSINESS_SERVICES";
    case SectorGroup::OtherServices:
        return "OTHER_SERVICES";
    case SectorGroup::Other:
        return "OTHER";
    }
    return "OTHER";
}

bool parse_sector_group(std::string_view token, SectorGroup& out) {
    if (token == "PRIMARY") {
        out = SectorGroup::Primary;
    } else if (token == "MANUFACTURING") {
        out = SectorGroup::Manufacturing;
    } else if (token == "BUSINESS_SERVICES") {
        out = SectorGroup::BusinessServices;
    } else if (token == "OTHER_SERVICES") {
        out = SectorGroup::OtherServices;
    } else if (token == "OTHER") {
        out = SectorGroup::Other;
    } else {
        return false;
    }
    return true;
}

} // namespace gvc
