#pragma once

#include <complex>

#include "swfilm/impedance.hpp"
#include "swfilm/units.hpp"

// Transmittance, reflectance and absorptance of the s-polarized wave from
// the impedance pair. Amplitude factors
//
//   p_j = (sqrt(eps1) cos(theta) Z(j) - 1) / (sqrt(eps1) cos(theta) Z(j) + 1)
//
// feed Fresnel-type combinations in the permittivity ratio eps12 = eps2/eps1:
//
//   R = | (u (pbar + p1 p2) + cos(theta) (pbar - p1 p2))
//       / (u (1 + pbar) + cos(theta) (1 - pbar)) |^2
//   T = cos(theta) Re(u) |p2 - p1|^2 / |u (1 + pbar) + cos(theta) (1 - pbar)|^2
//   A = 1 - T - R
//
// with u = sqrt(eps12 - sin^2 theta) and pbar = (p1 + p2)/2. The root u is
// the non-negative real branch for a non-negative radicand and +i sqrt|.|
// otherwise, so Re(u) = 0 and T vanishes identically under total internal
// reflection.

namespace swfilm {

struct AmplitudePair {
    std::complex<double> p1;
    std::complex<double> p2;
    std::complex<double> p_bar; // (p1 + p2) / 2
};

struct OpticalCoefficients {
    double transmittance;
    double reflectance;
    double absorptance;
    double energy_residual; // |1 - T - R - A|, zero by construction
};

// Branch rule shared by the optics and the slab oracle.
inline std::complex<double> normal_root(double radicand) {
    return radicand >= 0.0 ? std::complex<double>(std::sqrt(radicand), 0.0)
                           : std::complex<double>(0.0, std::sqrt(-radicand));
}

AmplitudePair amplitude_factors(const ImpedancePair& z, double eps1, double theta);

double reflectance(const AmplitudePair& p, double eps12, double theta);

double transmittance(const AmplitudePair& p, double eps12, double theta);

inline double absorptance(double t, double r) { return 1.0 - t - r; }

// Optics stage only: impedances already in hand.
OpticalCoefficients coefficients_from(const ImpedancePair& z, const StackConfiguration& stack,
                                      const IncidentWave& wave);

// Full pipeline: mode sums -> amplitudes -> T, R, A.
OpticalCoefficients coefficients(const MetalParameters& metal, const StackConfiguration& stack,
                                 const IncidentWave& wave, const SeriesControl& control);

} // namespace swfilm
