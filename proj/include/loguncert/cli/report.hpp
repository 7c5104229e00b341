#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace loguncert::cli {

// One row of the fixed ten-column table shared by every command:
// case,d,n,r_max,trial,lhs,rhs,slack,mode,anchor.
struct ReportRow {
    std::string case_name;
    int d = 0;
    int n = 0;
    double r_max = 0.0;
    std::string trial;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    std::string mode;
    std::string anchor;
};

// Shortest round-trip decimal for the value; nan and inf spelled out.
std::string format_double(double v);

// RFC 4180 quoting: fields containing commas, quotes, or newlines are
// wrapped in double quotes with embedded quotes doubled.
std::string csv_field(const std::string& raw);

// Header line plus one line per row, LF separated.
std::string to_csv(const std::vector<ReportRow>& rows);

// Same row as a JSON object; non-finite numbers serialize as null.
nlohmann::json row_json(const ReportRow& row);

// Writes to path.tmp and renames over path so readers never see a torn file.
// Creates missing parent directories. Throws numerical_failure on I/O errors.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace loguncert::cli
