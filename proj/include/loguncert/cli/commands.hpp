#pragma once

#include <iosfwd>

#include "loguncert/cli/config.hpp"

namespace loguncert::cli {

// Each command returns its process exit code: 0 success, 1 inequality
// violation, 2 invalid configuration, 3 numerical failure. Human-readable
// progress goes to `out`; report files land in config.out_dir.

// Scans the selected cases over the selected trials and reports slack per
// (case, trial) pair.
int cmd_verify(const Config& config, std::ostream& out);

// Differentiates a parametric inequality family at t = 0 on each trial and
// reports both derivative sides; with two or more trials it also recovers the
// coefficients of the differentiated left side.
int cmd_differentiate(const Config& config, std::ostream& out);

// Seeded simplex search for an empirical constant over a trial family.
int cmd_estimate(const Config& config, std::ostream& out);

// Prints the closed-form constant tables.
int cmd_constants(const Config& config, std::ostream& out);

}  // namespace loguncert::cli
