#pragma once

#include <complex>

#include "swfilm/units.hpp"

// Transverse dielectric response of the degenerate electron gas, evaluated
// per Fourier mode of the film. The closed form carries a removable
// singularity at q1 -> 0 which is replaced by its Taylor expansion below a
// relative threshold (see epsilon_transverse).

namespace swfilm {

struct TransverseArgument {
    double q1;          // dimensionless wavevector magnitude, >= 0
    double omega_ratio; // > 0
    double eps_coll;    // >= 0
};

// Wavevector data for mode n: Q_sq = (pi n / W)^2 + eps1 Omega^2 sin^2(theta),
// q1 = (v_f / c) sqrt(Q_sq).
struct ModeWavevector {
    double q1;
    double Q_sq;
};

// Kinetic transverse permittivity.
//
//   eps_tr = 1 - 3/(4 Omega q1^3) [ 2 z q1 + (z^2 - q1^2) ln((z-q1)/(z+q1)) ],
//   z = Omega + i eps.
//
// Principal branch of the logarithm; for eps_coll > 0 the argument never
// crosses the negative real axis for real q1 >= 0. Below q1 = 3e-2 |z| the
// closed form cancels badly and a Taylor expansion through q1^4 replaces
// it; the branches agree to better than 1e-10 relative at the switch (away
// from the plasma resonance, where the response itself nearly vanishes).
std::complex<double> epsilon_transverse(const TransverseArgument& arg);

// Small-q limit of eps_tr: the local (collisional Drude) permittivity.
inline std::complex<double> drude_permittivity(double omega_ratio, double eps_coll) {
    std::complex<double> z(omega_ratio, eps_coll);
    return 1.0 - 1.0 / (omega_ratio * z);
}

ModeWavevector mode_wavevector(long n, double reduced_w, const IncidentWave& wave,
                               double eps1, const MetalParameters& metal);

} // namespace swfilm
