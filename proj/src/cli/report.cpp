#include "loguncert/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "loguncert/errors.hpp"

namespace loguncert::cli {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

std::string to_csv(const std::vector<ReportRow>& rows) {
    std::string out = "case,d,n,r_max,trial,lhs,rhs,slack,mode,anchor\n";
    for (const ReportRow& r : rows) {
        out += csv_field(r.case_name) + ',';
        out += std::to_string(r.d) + ',';
        out += std::to_string(r.n) + ',';
        out += format_double(r.r_max) + ',';
        out += csv_field(r.trial) + ',';
        out += format_double(r.lhs) + ',';
        out += format_double(r.rhs) + ',';
        out += format_double(r.slack) + ',';
        out += csv_field(r.mode) + ',';
        out += csv_field(r.anchor) + '\n';
    }
    return out;
}

namespace {

// nlohmann serializes non-finite doubles as null, which is what we want for
// rejected rows; this helper just keeps the intent explicit.
nlohmann::json number_or_null(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

}  // namespace

nlohmann::json row_json(const ReportRow& row) {
    nlohmann::json j;
    j["case"] = row.case_name;
    j["d"] = row.d;
    j["n"] = row.n;
    j["r_max"] = row.r_max;
    j["trial"] = row.trial;
    j["lhs"] = number_or_null(row.lhs);
    j["rhs"] = number_or_null(row.rhs);
    j["slack"] = number_or_null(row.slack);
    j["mode"] = row.mode;
    j["anchor"] = row.anchor;
    return j;
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    std::error_code ec;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path(), ec);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw numerical_failure("cannot open report file: " + tmp);
        out << content;
        out.flush();
        if (!out) throw numerical_failure("cannot write report file: " + tmp);
    }
    std::rename(tmp.c_str(), path.c_str());
    if (!fs::exists(target))
        throw numerical_failure("cannot finalize report file: " + path);
}

}  // namespace loguncert::cli
