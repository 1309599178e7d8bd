#pragma once

#include <cmath>
#include <numbers>

#include "swfilm/errors.hpp"

// Physical parameters and dimensionless conversions. Everything downstream
// of this header works in pure numbers: frequencies as fractions of the
// plasma frequency, lengths through the reduced thickness W. CGS units
// (cm, s) at the boundary, matching the tabulated metal data.

namespace swfilm {

namespace constants {
// Speed of light, cm/s.
inline constexpr double c_cgs = 2.99792458e10;
inline constexpr double pi = std::numbers::pi;
} // namespace constants

struct MetalParameters {
    double omega_p;  // angular plasma frequency, rad/s
    double v_f;      // Fermi velocity, cm/s
    double eps_coll; // collision frequency as a fraction of omega_p
};

struct StackConfiguration {
    double eps1; // permittivity of the incidence medium (real, non-absorbing)
    double eps2; // permittivity of the exit medium (real)
    double d_nm; // film thickness, nm
};

struct IncidentWave {
    double omega_ratio; // wave frequency over plasma frequency
    double theta;       // incidence angle, radians, in [0, pi/2)
};

inline void validate(const MetalParameters& m) {
    if (!(m.omega_p > 0.0))
        throw DomainError("omega_p must be positive");
    if (!(m.v_f > 0.0) || !(m.v_f < constants::c_cgs))
        throw DomainError("v_f must be positive and below c");
    if (!(m.eps_coll >= 0.0))
        throw DomainError("eps_coll must be non-negative");
}

inline void validate(const StackConfiguration& s) {
    if (!(s.eps1 > 0.0))
        throw DomainError("eps1 must be positive");
    if (!(s.eps2 > 0.0))
        throw DomainError("eps2 must be positive");
    if (!(s.d_nm > 0.0))
        throw DomainError("film thickness must be positive");
}

inline void validate(const IncidentWave& w) {
    if (!(w.omega_ratio > 0.0))
        throw DomainError("omega_ratio must be positive");
    if (!(w.theta >= 0.0) || !(w.theta < constants::pi / 2))
        throw DomainError("theta must lie in [0, pi/2)");
}

// Reduced film thickness W = omega_p * d / c with d in nm (1 nm = 1e-7 cm).
inline double reduced_thickness(const MetalParameters& metal, double d_nm) {
    if (!(d_nm > 0.0))
        throw DomainError("film thickness must be positive");
    return metal.omega_p * d_nm * 1e-7 / constants::c_cgs;
}

// eps2 / eps1, the only combination the Fresnel-type formulas need.
inline double permittivity_ratio(const StackConfiguration& stack) {
    if (!(stack.eps1 > 0.0))
        throw DomainError("eps1 must be positive");
    return stack.eps2 / stack.eps1;
}

// Sodium: the standard test metal for degenerate-plasma film optics.
inline MetalParameters sodium() {
    return {6.5e15, 8.52e7, 1e-3};
}

} // namespace swfilm
