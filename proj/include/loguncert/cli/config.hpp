#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loguncert/grid.hpp"
#include "loguncert/trial.hpp"

namespace loguncert::cli {

// Harness configuration. Flat key-value text (INI sections) and JSON
// documents map onto the same structure; unknown keys are rejected so a typo
// cannot silently change a run.
struct GridConfig {
    int dimension = 3;
    int resolution = 512;
    double r_max = 16.0;
    std::string scheme = "composite-gauss";  // or "log-uniform"
};

struct SuiteConfig {
    std::vector<std::string> cases;  // empty selects the whole standard suite
    std::string trials = "standard";
    double slack_tolerance = 1e-6;
    double lambda = 0.0;  // nonzero overrides the kernel power of the hls case
};

struct EstimateConfig {
    std::string case_name = "main";
    std::string family = "wide";  // or "gaussian-only"
    std::size_t budget = 2000;
    std::uint64_t seed = 1;
    double s = 0.3;  // smoothness order for the ratio-form case
    double p = 3.0;  // Lebesgue exponent for the ratio-form case
    double t = 0.5;  // sweep position for the interpolation case
};

struct DifferentiateConfig {
    std::string family = "rubin";    // or "identity"
    std::string endpoint = "upper";  // or "sobolev"
    std::vector<double> s1 = {0.2};
    double constant = 1.0;  // interpolation constant fed into the family
    std::string trials = "gaussian:0.5,poly:1:6";
};

struct Config {
    GridConfig grid;
    SuiteConfig suite;
    EstimateConfig estimate;
    DifferentiateConfig differentiate;
    std::string out_dir = ".";
    std::string format = "both";  // "csv", "json", or "both"
};

// Parses INI-style text: [section] headers, key = value lines, # and ;
// comments. Sections are grid, suite, estimate, differentiate, output.
Config parse_config_text(const std::string& text);

// Parses a JSON object of section objects carrying the same keys.
Config parse_config_json(const std::string& text);

// Reads the file and dispatches on content: a leading '{' or a .json
// extension selects the JSON parser.
Config load_config_file(const std::string& path);

// "standard" expands to the standard trial bag for the dimension; otherwise a
// comma-separated list of compact specs: gaussian:A, exponential:A, poly:A:K,
// hermite:K, random:SEED or random:SEED:M.
std::vector<TrialSpec> parse_trials(const std::string& list, int dimension);

GridPtr make_grid_from(const GridConfig& grid);

}  // namespace loguncert::cli
