#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swfilm/sweep.hpp"

// Run configuration assembled from command-line flags, an optional config
// file and built-in defaults, with flag > file > default precedence. The
// config file is plain "key = value" text with '#' comments; keys are the
// long flag names with '-' replaced by '_'.

namespace swfilm {

struct RunConfiguration {
    std::string preset = "sodium";
    double omega_p = 6.5e15;  // rad/s
    double v_f = 8.52e7;      // cm/s
    double eps_coll = 1e-3;
    double eps1 = 1.0;
    double eps2 = 4.0;
    double d_nm = 100.0;
    double theta_deg = 0.0;
    double omega_ratio = 1.0;
    std::optional<AxisRange> sweep;
    bool oracle = false;
    double vf_scale = 1.0;
    double rel_tol = 1e-9;
    long max_terms = 200000;
    std::string output; // empty: standard output

    bool operator==(const RunConfiguration&) const = default;

    ModelPoint model_point() const;
    SeriesControl series_control() const;
    std::optional<SweepSpec> sweep_spec() const;
};

// --help was requested; carries the formatted usage text.
struct HelpRequested {
    std::string text;
};

// args excludes the program name. Throws ConfigError on bad input and
// HelpRequested on --help.
RunConfiguration parse_config(const std::vector<std::string>& args);

// Config-file rendering of cfg; parse_config({"--config", <file>}) of the
// written text reproduces cfg exactly.
std::string emit_config(const RunConfiguration& cfg);

// "axis:start:stop:steps" with axis one of omega|d|theta|eps2.
AxisRange parse_sweep_token(const std::string& token);
std::string sweep_token(const AxisRange& range);

// Number, or one of the substrate shortcuts glass=4, mica=8, ceramic=40.
double parse_eps2_token(const std::string& token);

} // namespace swfilm
