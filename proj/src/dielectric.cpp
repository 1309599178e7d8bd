#include "swfilm/dielectric.hpp"

#include <cmath>

namespace swfilm {

using cd = std::complex<double>;

cd epsilon_transverse(const TransverseArgument& arg) {
    const double q1 = arg.q1;
    const double omega = arg.omega_ratio;
    const double ec = arg.eps_coll;

    if (!(omega > 0.0))
        throw DomainError("epsilon_transverse: omega_ratio must be positive");
    if (!(q1 >= 0.0))
        throw DomainError("epsilon_transverse: q1 must be non-negative");
    if (!(ec >= 0.0))
        throw DomainError("epsilon_transverse: eps_coll must be non-negative");
    if (ec == 0.0 && q1 == omega)
        throw BranchPointError("epsilon_transverse: q1 == omega_ratio with zero collisions "
                               "lands on the logarithm branch point");

    const cd z(omega, ec);

    // Below the switch the closed form cancels to ~(4/3) q1^3 / z inside the
    // bracket, so its round-off grows like 1/q1^3; the expansion
    //   1 - 1/(Omega z) - q1^2/(5 Omega z^3) - 3 q1^4/(35 Omega z^5)
    // (Taylor of the logarithm, re-derived and verified against the closed
    // form) is good to ~1e-11 relative at q1 = 3e-2 |z|, where the closed
    // form is already clean. Both branches agree through the switch to
    // better than 1e-10 away from the plasma resonance.
    if (q1 < 3e-2 * std::abs(z)) {
        const cd z2 = z * z;
        const cd z3 = z2 * z;
        const double q2 = q1 * q1;
        return 1.0 - 1.0 / (omega * z) - q2 / (5.0 * omega * z3) -
               3.0 * q2 * q2 / (35.0 * omega * z3 * z2);
    }

    const cd log_term = std::log((z - q1) / (z + q1));
    const cd bracket = 2.0 * z * q1 + (z * z - q1 * q1) * log_term;
    return 1.0 - 3.0 / (4.0 * omega * q1 * q1 * q1) * bracket;
}

ModeWavevector mode_wavevector(long n, double reduced_w, const IncidentWave& wave,
                               double eps1, const MetalParameters& metal) {
    if (!(reduced_w > 0.0))
        throw DomainError("mode_wavevector: reduced thickness must be positive");
    if (n < 0)
        throw DomainError("mode_wavevector: mode index must be non-negative");

    const double qx = constants::pi * static_cast<double>(n) / reduced_w;
    const double st = std::sin(wave.theta);
    const double Q_sq = qx * qx + eps1 * wave.omega_ratio * wave.omega_ratio * st * st;
    const double q1 = metal.v_f / constants::c_cgs * std::sqrt(Q_sq);
    return {q1, Q_sq};
}

} // namespace swfilm
