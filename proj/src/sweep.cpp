#include "swfilm/sweep.hpp"

#include <cmath>
#include <limits>

#include "swfilm/optics.hpp"
#include "swfilm/slab_oracle.hpp"

namespace swfilm {

namespace {
constexpr double kMinOmegaStart = 0.01; // model is singular at Omega = 0
}

const char* axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::omega_ratio: return "omega";
        case SweepAxis::d_nm: return "d";
        case SweepAxis::theta_deg: return "theta";
        case SweepAxis::eps2: return "eps2";
    }
    return "?";
}

IncidentWave ModelPoint::wave() const {
    return {omega_ratio, theta_deg * constants::pi / 180.0};
}

void validate(const AxisRange& range) {
    if (range.steps < 2)
        throw ConfigError("sweep steps must be at least 2");
    if (!(range.start < range.stop))
        throw ConfigError("sweep start must be below stop");
    switch (range.axis) {
        case SweepAxis::omega_ratio:
            if (!(range.start >= kMinOmegaStart))
                throw ConfigError("omega sweep must start at 0.01 or above");
            break;
        case SweepAxis::d_nm:
            if (!(range.start > 0.0))
                throw ConfigError("thickness sweep must start above 0");
            break;
        case SweepAxis::theta_deg:
            if (!(range.start >= 0.0) || !(range.stop < 90.0))
                throw ConfigError("theta sweep must lie in [0, 90) degrees");
            break;
        case SweepAxis::eps2:
            if (!(range.start > 0.0))
                throw ConfigError("eps2 sweep must start above 0");
            break;
    }
}

double axis_value(const AxisRange& range, long i) {
    if (i <= 0) return range.start;
    if (i >= range.steps - 1) return range.stop;
    return range.start + (range.stop - range.start) * static_cast<double>(i) /
                             static_cast<double>(range.steps - 1);
}

namespace {

ModelPoint point_at(const SweepSpec& spec, long i) {
    ModelPoint p = spec.fixed;
    const double v = axis_value(spec.range, i);
    switch (spec.range.axis) {
        case SweepAxis::omega_ratio: p.omega_ratio = v; break;
        case SweepAxis::d_nm: p.stack.d_nm = v; break;
        case SweepAxis::theta_deg: p.theta_deg = v; break;
        case SweepAxis::eps2: p.stack.eps2 = v; break;
    }
    return p;
}

} // namespace

SweepRow evaluate_point_throwing(const ModelPoint& point, const SeriesControl& control,
                                 bool with_oracle) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    SweepRow row{point.omega_ratio,
                 point.stack.d_nm,
                 point.theta_deg,
                 point.stack.eps1,
                 point.stack.eps2,
                 nan,   nan, nan, with_oracle, nan, nan, nan,
                 0,     nan, {}};
    const IncidentWave wave = point.wave();
    const ImpedancePair z = impedance_pair(point.metal, point.stack, wave, control);
    const OpticalCoefficients c = coefficients_from(z, point.stack, wave);
    row.transmittance = c.transmittance;
    row.reflectance = c.reflectance;
    row.absorptance = c.absorptance;
    row.terms_used = z.terms_used;
    row.tail_bound = z.tail_bound;
    if (with_oracle) {
        const OpticalCoefficients o = fresnel_slab(point.metal, point.stack, wave);
        row.oracle_transmittance = o.transmittance;
        row.oracle_reflectance = o.reflectance;
        row.oracle_absorptance = o.absorptance;
    }
    return row;
}

SweepRow evaluate_point(const ModelPoint& point, const SeriesControl& control, bool with_oracle) {
    try {
        return evaluate_point_throwing(point, control, with_oracle);
    } catch (const Error& e) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        SweepRow row{point.omega_ratio,
                     point.stack.d_nm,
                     point.theta_deg,
                     point.stack.eps1,
                     point.stack.eps2,
                     nan,   nan, nan, with_oracle, nan, nan, nan,
                     0,     nan, e.what()};
        return row;
    }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SeriesControl& control,
                                bool with_oracle) {
    validate(spec.range);
    validate(control);
    std::vector<SweepRow> rows(static_cast<size_t>(spec.range.steps));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < spec.range.steps; ++i)
        rows[static_cast<size_t>(i)] = evaluate_point(point_at(spec, i), control, with_oracle);
    return rows;
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec, const SeriesControl& control,
                                       bool with_oracle) {
    validate(spec.range);
    validate(control);
    std::vector<SweepRow> rows(static_cast<size_t>(spec.range.steps));
    for (long i = 0; i < spec.range.steps; ++i)
        rows[static_cast<size_t>(i)] = evaluate_point(point_at(spec, i), control, with_oracle);
    return rows;
}

} // namespace swfilm
