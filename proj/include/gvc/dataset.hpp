#pragma once

#include <filesystem>
#include <map>
#include <vector>

#include "gvc/table.hpp"
#include "gvc/taxonomy.hpp"
#include "gvc/validate.hpp"

namespace gvc {

// On-disk layout, format_version=1:
//
//   <root>/manifest.txt               format_version=1
//   <root>/nodes.csv                  node_id,country,sector,group
//   <root>/indicators.csv             country,year,ip_receipts_pct_gdp,rd_pct_gdp,population
//   <root>/year=YYYY/z.csv            row_node,col_node,value   (sparse, absent = 0)
//   <root>/year=YYYY/final.csv        row_node,dest_country,value
//   <root>/year=YYYY/va.csv           node,value
//   <root>/year=YYYY/output.csv       node,value                (optional)
//
// UTF-8, LF, decimal points, no quoting; codes restricted to [A-Z0-9_]+.
// Node order in nodes.csv is authoritative for every matrix. When
// output.csv is absent, gross output is derived from row balance.

struct Dataset {
    std::map<int, IcioTable> tables;          // keyed by year, ascending
    std::map<int, ValidationReport> reports;  // validation at read mode
    std::vector<ExternalIndicatorRow> indicators;
};

inline constexpr int kDatasetFormatVersion = 1;

// Reads and validates a dataset. Schema violations throw ParseError with
// file/line/column, missing files throw IoError; balance and sign findings
// land in the per-year reports instead of throwing.
Dataset read_dataset(const std::filesystem::path& root,
                     ValidationMode mode = ValidationMode::Lenient,
                     double balance_tolerance = kDefaultBalanceTolerance);

struct DatasetWriteOptions {
    bool force = false;              // overwrite a non-empty root
    bool write_output_vector = true; // emit output.csv
};

// Writes tables (which must share one node list) and the indicator panel.
// Numbers are serialized with 17 significant digits so a read round-trips
// bit-exactly. Refuses to write into a non-empty directory unless forced.
void write_dataset(const std::filesystem::path& root, const std::vector<IcioTable>& tables,
                   const std::vector<ExternalIndicatorRow>& indicators,
                   const DatasetWriteOptions& options = {});

// Locale-independent float formatting used by every writer (17 significant
// digits, shortest form).
std::string format_value(double value);

} // namespace gvc
