#include "swfilm/slab_oracle.hpp"

#include <cmath>

#include "swfilm/dielectric.hpp"

namespace swfilm {

using cd = std::complex<double>;

namespace {

// Normalized normal wavevector sqrt(eps - eps1 sin^2 theta); principal
// branch for complex eps, flipped onto Im >= 0 so the film wave decays.
// For real eps this reduces to the optics module's branch rule.
cd kappa(cd eps, double eps1_sin2) {
    cd v = std::sqrt(eps - eps1_sin2);
    if (v.imag() < 0.0) v = -v;
    if (v.imag() == 0.0 && v.real() < 0.0) v = -v;
    return v;
}

} // namespace

OpticalCoefficients fresnel_slab(const MetalParameters& metal, const StackConfiguration& stack,
                                 const IncidentWave& wave) {
    validate(metal);
    validate(stack);
    validate(wave);

    const double st = std::sin(wave.theta);
    const double eps1_sin2 = stack.eps1 * st * st;
    const cd eps_film = drude_permittivity(wave.omega_ratio, metal.eps_coll);

    const cd k1(std::sqrt(stack.eps1) * std::cos(wave.theta), 0.0);
    const cd kf = kappa(eps_film, eps1_sin2);
    const cd k2 = kappa(cd(stack.eps2, 0.0), eps1_sin2);

    const cd r1f = (k1 - kf) / (k1 + kf);
    const cd rf2 = (kf - k2) / (kf + k2);
    const cd t1f = 2.0 * k1 / (k1 + kf);
    const cd tf2 = 2.0 * kf / (kf + k2);

    // Optical phase across the film: (omega d / c) kappa_f = Omega W kappa_f.
    const double w = reduced_thickness(metal, stack.d_nm);
    const cd beta = wave.omega_ratio * w * kf;
    const cd e_ib = std::exp(cd(0.0, 1.0) * beta);
    const cd e_2ib = e_ib * e_ib;

    const cd den = 1.0 + r1f * rf2 * e_2ib;
    if (std::abs(den) < 1e-300)
        throw DegenerateError("fresnel_slab: vanishing slab denominator");

    const cd r = (r1f + rf2 * e_2ib) / den;
    const cd t = t1f * tf2 * e_ib / den;

    const double refl = std::norm(r);
    const double trans = (k2.real() / k1.real()) * std::norm(t);
    const double absn = 1.0 - trans - refl;
    return {trans, refl, absn, std::abs(1.0 - trans - refl - absn)};
}

} // namespace swfilm
