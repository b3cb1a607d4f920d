#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gvc/dataset.hpp"
#include "gvc/errors.hpp"

namespace gvc {

namespace {

bool valid_utf8(const std::string& bytes) {
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        const auto c = static_cast<unsigned char>(bytes[i]);
        std::size_t len = 0;
        if (c < 0x80) {
            len = 1;
        } else if ((c >> 5) == 0x6) {
            len = 2;
        } else if ((c >> 4) == 0xE) {
            len = 3;
        } else if ((c >> 3) == 0x1E) {
            len = 4;
        } else {
            return false;
        }
        if (i + len > n) {
            return false;
        }
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(bytes[i + k]) >> 6) != 0x2) {
                return false;
            }
        }
        i += len;
    }
    return true;
}

// Line-oriented CSV with a fixed header and no quoting; the schemas only
// carry restricted code tokens and numbers.
class CsvFile {
  public:
    CsvFile(const std::filesystem::path& path, const std::vector<std::string>& header) {
        name_ = path.string();
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw IoError("cannot read '" + name_ + "'");
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::string content = buffer.str();
        if (!valid_utf8(content)) {
            throw ParseError(name_, 0, 0, "file is not valid UTF-8");
        }

        std::string expected;
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i > 0) {
                expected += ',';
            }
            expected += header[i];
        }

        std::istringstream lines(content);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(lines, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line_no == 1) {
                if (line != expected) {
                    throw ParseError(name_, 1, 0,
                                     "bad header, expected '" + expected + "' got '" + line + "'");
                }
                continue;
            }
            if (line.empty()) {
                continue;
            }
            std::vector<std::string> fields;
            std::size_t start = 0;
            while (true) {
                const auto comma = line.find(',', start);
                if (comma == std::string::npos) {
                    fields.push_back(line.substr(start));
                    break;
                }
                fields.push_back(line.substr(start, comma - start));
                start = comma + 1;
            }
            if (fields.size() != header.size()) {
                throw ParseError(name_, line_no, 0,
                                 "expected " + std::to_string(header.size()) + " fields, got " +
                                     std::to_string(fields.size()));
            }
            rows_.push_back({line_no, std::move(fields)});
        }
    }

    struct Row {
        std::size_t line;
        std::vector<std::string> fields;
    };

    const std::vector<Row>& rows() const { return rows_; }
    const std::string& name() const { return name_; }

    [[noreturn]] void fail(const Row& row, std::size_t column, const std::string& what) const {
        throw ParseError(name_, row.line, column + 1, what);
    }

    double number(const Row& row, std::size_t column) const {
        const std::string& field = row.fields[column];
        double out = 0.0;
        const char* begin = field.data();
        const char* end = begin + field.size();
        auto [ptr, ec] = std::from_chars(begin, end, out);
        if (ec != std::errc() || ptr != end) {
            fail(row, column, "invalid number '" + field + "'");
        }
        return out;
    }

    std::int64_t integer(const Row& row, std::size_t column) const {
        const std::string& field = row.fields[column];
        std::int64_t out = 0;
        const char* begin = field.data();
        const char* end = begin + field.size();
        auto [ptr, ec] = std::from_chars(begin, end, out);
        if (ec != std::errc() || ptr != end) {
            fail(row, column, "invalid integer '" + field + "'");
        }
        return out;
    }

    std::uint64_t count(const Row& row, std::size_t column) const {
        const std::string& field = row.fields[column];
        std::uint64_t out = 0;
        const char* begin = field.data();
        const char* end = begin + field.size();
        auto [ptr, ec] = std::from_chars(begin, end, out);
        if (ec != std::errc() || ptr != end) {
            fail(row, column, "invalid count '" + field + "'");
        }
        return out;
    }

    std::string code(const Row& row, std::size_t column) const {
        const std::string& field = row.fields[column];
        if (!is_valid_code(field)) {
            fail(row, column, "invalid code '" + field + "' (expected [A-Z0-9_]+)");
        }
        return field;
    }

  private:
    std::string name_;
    std::vector<Row> rows_;
};

void check_format_version(const std::filesystem::path& root) {
    const auto path = root / "manifest.txt";
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read '" + path.string() + "'");
    }
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.rfind("format_version=", 0) == 0) {
            const std::string value = line.substr(std::string("format_version=").size());
            if (value != std::to_string(kDatasetFormatVersion)) {
                throw StructuralError("unsupported format_version '" + value + "' in " +
                                      path.string());
            }
            return;
        }
    }
    throw StructuralError("missing format_version line in " + path.string());
}

std::vector<Node> read_nodes(const std::filesystem::path& root) {
    const CsvFile csv(root / "nodes.csv", {"node_id", "country", "sector", "group"});
    std::vector<Node> nodes;
    nodes.reserve(csv.rows().size());
    for (const auto& row : csv.rows()) {
        Node node;
        node.id = csv.code(row, 0);
        node.country = csv.code(row, 1);
        node.sector = csv.code(row, 2);
        if (!parse_sector_group(row.fields[3], node.group)) {
            csv.fail(row, 3, "unknown sector group '" + row.fields[3] + "'");
        }
        nodes.push_back(std::move(node));
    }
    if (nodes.empty()) {
        throw StructuralError("nodes.csv lists no nodes");
    }
    return nodes;
}

std::vector<ExternalIndicatorRow> read_indicators(const std::filesystem::path& root) {
    const auto path = root / "indicators.csv";
    if (!std::filesystem::exists(path)) {
        return {};
    }
    const CsvFile csv(path, {"country", "year", "ip_receipts_pct_gdp", "rd_pct_gdp",
                             "population"});
    std::vector<ExternalIndicatorRow> rows;
    std::set<std::pair<std::string, int>> seen;
    for (const auto& row : csv.rows()) {
        ExternalIndicatorRow out;
        out.country = csv.code(row, 0);
        out.year = static_cast<int>(csv.integer(row, 1));
        out.ip_receipts_pct_gdp = csv.number(row, 2);
        out.rd_pct_gdp = csv.number(row, 3);
        out.population = csv.count(row, 4);
        if (!seen.insert({out.country, out.year}).second) {
            csv.fail(row, 0, "duplicate indicators for (" + out.country + ", " +
                                 std::to_string(out.year) + ")");
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

IcioTable read_year(const std::filesystem::path& dir, const std::vector<Node>& nodes, int year) {
    std::map<std::string, int> index;
    std::map<std::string, int> country_index;
    std::vector<std::string> countries;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        index[nodes[i].id] = static_cast<int>(i);
        if (country_index.emplace(nodes[i].country, static_cast<int>(countries.size())).second) {
            countries.push_back(nodes[i].country);
        }
    }
    const int m = static_cast<int>(nodes.size());
    const int g = static_cast<int>(countries.size());

    auto node_of = [&](const CsvFile& csv, const CsvFile::Row& row, std::size_t col) {
        const std::string id = csv.code(row, col);
        auto it = index.find(id);
        if (it == index.end()) {
            csv.fail(row, col, "unknown node '" + id + "' (not in nodes.csv)");
        }
        return it->second;
    };

    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(m, m);
    {
        const CsvFile csv(dir / "z.csv", {"row_node", "col_node", "value"});
        std::set<std::pair<int, int>> seen;
        for (const auto& row : csv.rows()) {
            const int i = node_of(csv, row, 0);
            const int j = node_of(csv, row, 1);
            if (!seen.insert({i, j}).second) {
                csv.fail(row, 0, "duplicate cell (" + row.fields[0] + ", " + row.fields[1] + ")");
            }
            z(i, j) = csv.number(row, 2);
        }
    }

    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(m, g);
    {
        const CsvFile csv(dir / "final.csv", {"row_node", "dest_country", "value"});
        std::set<std::pair<int, int>> seen;
        for (const auto& row : csv.rows()) {
            const int i = node_of(csv, row, 0);
            const std::string dest = csv.code(row, 1);
            auto it = country_index.find(dest);
            if (it == country_index.end()) {
                csv.fail(row, 1, "unknown destination country '" + dest + "'");
            }
            if (!seen.insert({i, it->second}).second) {
                csv.fail(row, 0, "duplicate cell (" + row.fields[0] + ", " + dest + ")");
            }
            f(i, it->second) = csv.number(row, 2);
        }
    }

    auto read_vector = [&](const std::filesystem::path& path) {
        const CsvFile csv(path, {"node", "value"});
        Eigen::VectorXd values = Eigen::VectorXd::Zero(m);
        std::vector<bool> seen(static_cast<std::size_t>(m), false);
        for (const auto& row : csv.rows()) {
            const int i = node_of(csv, row, 0);
            if (seen[static_cast<std::size_t>(i)]) {
                csv.fail(row, 0, "duplicate node '" + row.fields[0] + "'");
            }
            seen[static_cast<std::size_t>(i)] = true;
            values(i) = csv.number(row, 1);
        }
        for (int i = 0; i < m; ++i) {
            if (!seen[static_cast<std::size_t>(i)]) {
                throw ParseError(path.string(), 0, 0, "missing node '" + nodes[static_cast<std::size_t>(i)].id + "'");
            }
        }
        return values;
    };

    const Eigen::VectorXd va = read_vector(dir / "va.csv");

    Eigen::VectorXd x;
    if (std::filesystem::exists(dir / "output.csv")) {
        x = read_vector(dir / "output.csv");
    } else {
        // derive gross output from row balance, fixed summation order
        x = Eigen::VectorXd::Zero(m);
        for (int i = 0; i < m; ++i) {
            double total = 0.0;
            for (int j = 0; j < m; ++j) {
                total += z(i, j);
            }
            for (int r = 0; r < g; ++r) {
                total += f(i, r);
            }
            x(i) = total;
        }
    }

    return IcioTable(nodes, std::move(z), std::move(f), va, std::move(x), year);
}

} // namespace

Dataset read_dataset(const std::filesystem::path& root, ValidationMode mode,
                     double balance_tolerance) {
    if (!std::filesystem::is_directory(root)) {
        throw IoError("dataset root '" + root.string() + "' is not a directory");
    }
    check_format_version(root);
    const std::vector<Node> nodes = read_nodes(root);

    Dataset dataset;
    dataset.indicators = read_indicators(root);

    std::vector<std::pair<int, std::filesystem::path>> year_dirs;
    for (const auto& entry : std::filesystem::directory_iterator(root)) {
        if (!entry.is_directory()) {
            continue;
        }
        const std::string name = entry.path().filename().string();
        if (name.rfind("year=", 0) != 0) {
            continue;
        }
        const std::string digits = name.substr(5);
        int year = 0;
        const char* begin = digits.data();
        const char* end = begin + digits.size();
        auto [ptr, ec] = std::from_chars(begin, end, year);
        if (ec != std::errc() || ptr != end) {
            throw StructuralError("bad year directory name '" + name + "'");
        }
        year_dirs.emplace_back(year, entry.path());
    }
    std::sort(year_dirs.begin(), year_dirs.end());

    for (const auto& [year, dir] : year_dirs) {
        IcioTable table = read_year(dir, nodes, year);
        dataset.reports.emplace(year, validate_table(table, mode, balance_tolerance));
        dataset.tables.emplace(year, std::move(table));
    }
    return dataset;
}

} // namespace gvc
