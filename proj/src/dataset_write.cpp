#include <algorithm>
#include <charconv>
#include <fstream>

#include "gvc/dataset.hpp"
#include "gvc/errors.hpp"

namespace gvc {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    return out;
}

void check_shared_nodes(const std::vector<IcioTable>& tables) {
    const std::vector<Node>& reference = tables.front().nodes();
    for (const IcioTable& table : tables) {
        const std::vector<Node>& nodes = table.nodes();
        bool same = nodes.size() == reference.size();
        for (std::size_t i = 0; same && i < nodes.size(); ++i) {
            same = nodes[i].id == reference[i].id && nodes[i].country == reference[i].country &&
                   nodes[i].sector == reference[i].sector && nodes[i].group == reference[i].group;
        }
        if (!same) {
            throw StructuralError("all tables in a dataset must share one node list (year " +
                                  std::to_string(table.year()) + " differs)");
        }
    }
}

} // namespace

std::string format_value(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, 17);
    if (ec != std::errc()) {
        throw IoError("failed to format a number");
    }
    return std::string(buf, ptr);
}

void write_dataset(const std::filesystem::path& root, const std::vector<IcioTable>& tables,
                   const std::vector<ExternalIndicatorRow>& indicators,
                   const DatasetWriteOptions& options) {
    if (tables.empty()) {
        throw InputError("cannot write a dataset with no tables");
    }
    check_shared_nodes(tables);

    if (std::filesystem::exists(root)) {
        if (!std::filesystem::is_directory(root)) {
            throw IoError("'" + root.string() + "' exists and is not a directory");
        }
        if (!std::filesystem::is_empty(root) && !options.force) {
            throw IoError("refusing to overwrite non-empty '" + root.string() +
                          "' (use force to allow)");
        }
    }
    std::filesystem::create_directories(root);

    {
        auto out = open_for_write(root / "manifest.txt");
        out << "format_version=" << kDatasetFormatVersion << "\n";
    }

    const std::vector<Node>& nodes = tables.front().nodes();
    {
        auto out = open_for_write(root / "nodes.csv");
        out << "node_id,country,sector,group\n";
        for (const Node& node : nodes) {
            out << node.id << ',' << node.country << ',' << node.sector << ','
                << to_string(node.group) << '\n';
        }
    }

    {
        auto out = open_for_write(root / "indicators.csv");
        out << "country,year,ip_receipts_pct_gdp,rd_pct_gdp,population\n";
        std::vector<const ExternalIndicatorRow*> sorted;
        sorted.reserve(indicators.size());
        for (const ExternalIndicatorRow& row : indicators) {
            sorted.push_back(&row);
        }
        std::sort(sorted.begin(), sorted.end(),
                  [](const ExternalIndicatorRow* a, const ExternalIndicatorRow* b) {
                      return std::tie(a->country, a->year) < std::tie(b->country, b->year);
                  });
        for (const ExternalIndicatorRow* row : sorted) {
            out << row->country << ',' << row->year << ',' << format_value(row->ip_receipts_pct_gdp)
                << ',' << format_value(row->rd_pct_gdp) << ',' << row->population << '\n';
        }
    }

    for (const IcioTable& table : tables) {
        const auto dir = root / ("year=" + std::to_string(table.year()));
        std::filesystem::create_directories(dir);
        const int m = table.node_count();
        const int g = table.country_count();

        {
            auto out = open_for_write(dir / "z.csv");
            out << "row_node,col_node,value\n";
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    const double value = table.intermediates()(i, j);
                    if (value != 0.0) {
                        out << nodes[static_cast<std::size_t>(i)].id << ','
                            << nodes[static_cast<std::size_t>(j)].id << ',' << format_value(value)
                            << '\n';
                    }
                }
            }
        }
        {
            auto out = open_for_write(dir / "final.csv");
            out << "row_node,dest_country,value\n";
            for (int i = 0; i < m; ++i) {
                for (int r = 0; r < g; ++r) {
                    out << nodes[static_cast<std::size_t>(i)].id << ',' << table.country(r) << ','
                        << format_value(table.final_demand()(i, r)) << '\n';
                }
            }
        }
        {
            auto out = open_for_write(dir / "va.csv");
            out << "node,value\n";
            for (int i = 0; i < m; ++i) {
                out << nodes[static_cast<std::size_t>(i)].id << ','
                    << format_value(table.value_added()(i)) << '\n';
            }
        }
        if (options.write_output_vector) {
            auto out = open_for_write(dir / "output.csv");
            out << "node,value\n";
            for (int i = 0; i < m; ++i) {
                out << nodes[static_cast<std::size_t>(i)].id << ','
                    << format_value(table.gross_output()(i)) << '\n';
            }
        }
    }
}

} // namespace gvc
