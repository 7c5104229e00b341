#include "loguncert/cli/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "loguncert/errors.hpp"
#include "loguncert/lab.hpp"

namespace loguncert::cli {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return parts;
}

[[noreturn]] void bad_value(const std::string& where, const std::string& value) {
    throw invalid_argument("invalid value for " + where + ": '" + value + "'");
}

double parse_double(const std::string& where, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) bad_value(where, value);
        return v;
    } catch (const std::exception&) {
        bad_value(where, value);
    }
}

long long parse_int(const std::string& where, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size()) bad_value(where, value);
        return v;
    } catch (const std::exception&) {
        bad_value(where, value);
    }
}

std::uint64_t parse_u64(const std::string& where, const std::string& value) {
    const long long v = parse_int(where, value);
    if (v < 0) bad_value(where, value);
    return static_cast<std::uint64_t>(v);
}

std::vector<double> parse_double_list(const std::string& where,
                                      const std::string& value) {
    std::vector<double> out;
    for (const std::string& tok : split(value, ','))
        if (!tok.empty()) out.push_back(parse_double(where, tok));
    if (out.empty()) bad_value(where, value);
    return out;
}

// Single dispatch point shared by the text and JSON parsers.
void apply_key(Config& cfg, const std::string& section, const std::string& key,
               const std::string& value) {
    const std::string where = section + "." + key;
    if (section == "grid") {
        if (key == "dimension")
            cfg.grid.dimension = static_cast<int>(parse_int(where, value));
        else if (key == "resolution")
            cfg.grid.resolution = static_cast<int>(parse_int(where, value));
        else if (key == "r_max")
            cfg.grid.r_max = parse_double(where, value);
        else if (key == "scheme")
            cfg.grid.scheme = value;
        else
            throw invalid_argument("unknown config key: " + where);
    } else if (section == "suite") {
        if (key == "cases") {
            cfg.suite.cases.clear();
            if (value != "all")
                for (const std::string& tok : split(value, ','))
                    if (!tok.empty()) cfg.suite.cases.push_back(tok);
        } else if (key == "trials") {
            cfg.suite.trials = value;
        } else if (key == "slack_tolerance") {
            cfg.suite.slack_tolerance = parse_double(where, value);
        } else if (key == "lambda") {
            cfg.suite.lambda = parse_double(where, value);
        } else {
            throw invalid_argument("unknown config key: " + where);
        }
    } else if (section == "estimate") {
        if (key == "case")
            cfg.estimate.case_name = value;
        else if (key == "family")
            cfg.estimate.family = value;
        else if (key == "budget")
            cfg.estimate.budget = static_cast<std::size_t>(parse_u64(where, value));
        else if (key == "seed")
            cfg.estimate.seed = parse_u64(where, value);
        else if (key == "s")
            cfg.estimate.s = parse_double(where, value);
        else if (key == "p")
            cfg.estimate.p = parse_double(where, value);
        else if (key == "t")
            cfg.estimate.t = parse_double(where, value);
        else
            throw invalid_argument("unknown config key: " + where);
    } else if (section == "differentiate") {
        if (key == "family")
            cfg.differentiate.family = value;
        else if (key == "endpoint")
            cfg.differentiate.endpoint = value;
        else if (key == "s1")
            cfg.differentiate.s1 = parse_double_list(where, value);
        else if (key == "constant")
            cfg.differentiate.constant = parse_double(where, value);
        else if (key == "trials")
            cfg.differentiate.trials = value;
        else
            throw invalid_argument("unknown config key: " + where);
    } else if (section == "output") {
        if (key == "dir")
            cfg.out_dir = value;
        else if (key == "format")
            cfg.format = value;
        else
            throw invalid_argument("unknown config key: " + where);
    } else {
        throw invalid_argument("unknown config section: " + section);
    }
}

void validate(const Config& cfg) {
    require(cfg.format == "csv" || cfg.format == "json" || cfg.format == "both",
            "output format must be csv, json, or both");
    require(cfg.grid.scheme == "composite-gauss" ||
                cfg.grid.scheme == "log-uniform",
            "grid scheme must be composite-gauss or log-uniform");
}

std::string json_value_to_string(const std::string& where,
                                 const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    if (v.is_array()) {
        std::string joined;
        for (const auto& elem : v) {
            if (!joined.empty()) joined += ",";
            if (elem.is_array() || elem.is_object())
                throw invalid_argument("invalid nested value for " + where);
            joined += json_value_to_string(where, elem);
        }
        return joined;
    }
    throw invalid_argument("invalid value type for " + where);
}

}  // namespace

Config parse_config_text(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw invalid_argument("malformed section header at line " +
                                       std::to_string(lineno) + ": " + t);
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw invalid_argument("malformed config line " +
                                   std::to_string(lineno) + ": " + t);
        if (section.empty())
            throw invalid_argument("config key outside any section at line " +
                                   std::to_string(lineno));
        apply_key(cfg, section, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    validate(cfg);
    return cfg;
}

Config parse_config_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_argument(std::string("config JSON parse error: ") +
                               e.what());
    }
    if (!doc.is_object())
        throw invalid_argument("config JSON must be an object of sections");
    Config cfg;
    for (const auto& [section, body] : doc.items()) {
        if (!body.is_object())
            throw invalid_argument("config section must be an object: " +
                                   section);
        for (const auto& [key, value] : body.items())
            apply_key(cfg, section, key,
                      json_value_to_string(section + "." + key, value));
    }
    validate(cfg);
    return cfg;
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_argument("cannot read config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const std::string lead = trim(text.substr(0, text.find('\n')));
    const bool json = (!lead.empty() && lead[0] == '{') ||
                      (path.size() > 5 &&
                       path.compare(path.size() - 5, 5, ".json") == 0);
    return json ? parse_config_json(text) : parse_config_text(text);
}

std::vector<TrialSpec> parse_trials(const std::string& list, int dimension) {
    const std::string t = trim(list);
    if (t == "standard") return standard_trials(dimension);
    std::vector<TrialSpec> specs;
    for (const std::string& token : split(t, ',')) {
        if (token.empty()) continue;
        const std::vector<std::string> parts = split(token, ':');
        const std::string& kind = parts[0];
        const std::string where = "trial spec '" + token + "'";
        TrialSpec spec;
        if (kind == "gaussian" || kind == "exponential") {
            if (parts.size() != 2)
                throw invalid_argument(where + " expects kind:scale");
            spec.kind = kind == "gaussian" ? TrialKind::gaussian
                                           : TrialKind::exponential;
            spec.a = parse_double(where, parts[1]);
        } else if (kind == "poly") {
            if (parts.size() != 3)
                throw invalid_argument(where + " expects poly:scale:power");
            spec.kind = TrialKind::poly_decay;
            spec.a = parse_double(where, parts[1]);
            spec.k = static_cast<int>(parse_int(where, parts[2]));
        } else if (kind == "hermite") {
            if (parts.size() != 2)
                throw invalid_argument(where + " expects hermite:mode");
            spec.kind = TrialKind::radial_hermite;
            spec.k = static_cast<int>(parse_int(where, parts[1]));
        } else if (kind == "random") {
            if (parts.size() != 2 && parts.size() != 3)
                throw invalid_argument(where + " expects random:seed[:modes]");
            spec.kind = TrialKind::random_schwartz;
            spec.seed = parse_u64(where, parts[1]);
            spec.m = parts.size() == 3
                         ? static_cast<int>(parse_int(where, parts[2]))
                         : 5;
        } else {
            throw invalid_argument("unknown trial kind in '" + token + "'");
        }
        specs.push_back(spec);
    }
    if (specs.empty())
        throw invalid_argument("trial list is empty: '" + list + "'");
    return specs;
}

GridPtr make_grid_from(const GridConfig& grid) {
    GridScheme scheme;
    if (grid.scheme == "composite-gauss")
        scheme = GridScheme::composite_gauss;
    else if (grid.scheme == "log-uniform")
        scheme = GridScheme::log_uniform;
    else
        throw invalid_argument("unknown grid scheme: " + grid.scheme);
    return make_grid(grid.dimension, grid.r_max,
                     static_cast<std::size_t>(grid.resolution), scheme);
}

}  // namespace loguncert::cli
