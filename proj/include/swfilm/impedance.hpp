#pragma once

#include <complex>

#include "swfilm/dielectric.hpp"
#include "swfilm/units.hpp"

// Surface impedances of the film for specular electron reflection, as sums
// over transverse Fourier modes:
//
//   Z(1) = (4 i Omega / W) sum_{n>=1} 1 / (Omega^2 eps_tr(m) - Q^2(m)),  m = 2n-1
//   Z(2) = (2 i Omega / W) / (Omega^2 eps_tr(0) - Q^2(0))
//        + (4 i Omega / W) sum_{n>=1} 1 / (Omega^2 eps_tr(m) - Q^2(m)),  m = 2n
//
// Terms decay only as 1/m^2, so plain truncation converges slowly. Beyond
// the truncation point eps_tr ~ 1 and Q^2 ~ (pi m / W)^2, so the remaining
// tail is summed analytically as -(W/pi)^2 sum 1/m^2 over the parity class
// (a trigamma value) and applied as a correction. The stopping rule bounds
// the residual left AFTER that correction, which falls off as 1/m^3.

namespace swfilm {

struct SeriesControl {
    double rel_tol = 1e-9; // relative truncation tolerance, in (0, 1)
    long max_terms = 200000; // hard cap on summed modes per series, >= 16
};

inline void validate(const SeriesControl& c) {
    if (!(c.rel_tol > 0.0) || !(c.rel_tol < 1.0))
        throw DomainError("rel_tol must lie in (0, 1)");
    if (c.max_terms < 16)
        throw DomainError("max_terms must be at least 16");
}

// One impedance plus its convergence diagnostics.
struct ImpedanceResult {
    std::complex<double> z;
    long terms_used;   // modes evaluated, including the n = 0 term if present
    double tail_bound; // magnitude of the analytic tail correction applied
};

// Antisymmetric / symmetric impedance pair with pooled diagnostics:
// terms_used is the total over both series, tail_bound the larger of the two.
struct ImpedancePair {
    std::complex<double> z1;
    std::complex<double> z2;
    long terms_used;
    double tail_bound;
};

// Case 1: field antisymmetric across the film; odd modes only.
ImpedanceResult impedance_antisymmetric(const MetalParameters& metal,
                                        const StackConfiguration& stack,
                                        const IncidentWave& wave,
                                        const SeriesControl& control);

// Case 2: field symmetric across the film; even modes plus the unpaired
// n = 0 term at half the paired-mode weight.
ImpedanceResult impedance_symmetric(const MetalParameters& metal,
                                    const StackConfiguration& stack,
                                    const IncidentWave& wave,
                                    const SeriesControl& control);

ImpedancePair impedance_pair(const MetalParameters& metal,
                             const StackConfiguration& stack,
                             const IncidentWave& wave,
                             const SeriesControl& control);

namespace detail {
// Trigamma psi'(x) for x > 0; recurrence into the asymptotic regime.
double trigamma(double x);
} // namespace detail

} // namespace swfilm
