#pragma once

#include <string>
#include <vector>

#include "swfilm/impedance.hpp"
#include "swfilm/units.hpp"

// Cartesian single-axis sweeps over the model parameters. Grid points are
// independent; the parallel driver evaluates them in any order and writes
// each row into its own slot, so serial and parallel runs produce
// identical output. Points that raise model errors become marked rows
// rather than aborting the sweep.

namespace swfilm {

enum class SweepAxis { omega_ratio, d_nm, theta_deg, eps2 };

const char* axis_name(SweepAxis axis);

// One full parameter set. Angles cross this boundary in degrees; radians
// are derived at evaluation time.
struct ModelPoint {
    MetalParameters metal;
    StackConfiguration stack;
    double theta_deg;
    double omega_ratio;

    IncidentWave wave() const;
};

struct AxisRange {
    SweepAxis axis;
    double start;
    double stop;
    long steps;

    bool operator==(const AxisRange&) const = default;
};

struct SweepSpec {
    AxisRange range;
    ModelPoint fixed;
};

struct SweepRow {
    double omega_ratio;
    double d_nm;
    double theta_deg;
    double eps1;
    double eps2;
    double transmittance;
    double reflectance;
    double absorptance;
    bool with_oracle;
    double oracle_transmittance;
    double oracle_reflectance;
    double oracle_absorptance;
    long terms_used;
    double tail_bound;
    std::string error; // empty on success

    bool ok() const { return error.empty(); }
};

// Throw ConfigError on bad bounds; run_sweep validates before evaluating.
void validate(const AxisRange& range);

// Grid value for row i; endpoints land exactly on start and stop.
double axis_value(const AxisRange& range, long i);

// Single-point evaluation; model errors become the row's error marker.
SweepRow evaluate_point(const ModelPoint& point, const SeriesControl& control, bool with_oracle);

// As evaluate_point, but lets model errors propagate (single-point CLI
// runs map them to exit codes instead of marking the row).
SweepRow evaluate_point_throwing(const ModelPoint& point, const SeriesControl& control,
                                 bool with_oracle);

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SeriesControl& control,
                                bool with_oracle);

// Plain sequential driver, kept as the reference for the parallel one.
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec, const SeriesControl& control,
                                       bool with_oracle);

} // namespace swfilm
