#include "swfilm/reference.hpp"

#include <cmath>
#include <string>

namespace swfilm::reference {

using cd = std::complex<double>;

namespace {

struct Geometry {
    double omega, eps_coll, qz_sq, reduced_w, vf_over_c, a;
};

Geometry geometry(const MetalParameters& metal, const StackConfiguration& stack,
                  const IncidentWave& wave) {
    validate(metal);
    validate(stack);
    validate(wave);
    const double w = reduced_thickness(metal, stack.d_nm);
    const double st = std::sin(wave.theta);
    return {wave.omega_ratio,
            metal.eps_coll,
            stack.eps1 * wave.omega_ratio * wave.omega_ratio * st * st,
            w,
            metal.v_f / constants::c_cgs,
            constants::pi * constants::pi / (w * w)};
}

cd mode_term(const Geometry& g, long m) {
    const double qx = constants::pi * static_cast<double>(m) / g.reduced_w;
    const double Q_sq = qx * qx + g.qz_sq;
    const double q1 = g.vf_over_c * std::sqrt(Q_sq);
    const cd eps = epsilon_transverse({q1, g.omega, g.eps_coll});
    const cd den = g.omega * g.omega * eps - Q_sq;
    if (std::abs(den) < 1e-300)
        throw ResonanceError("mode denominator vanished at m=" + std::to_string(m), m);
    return 1.0 / den;
}

ImpedanceResult serial_sum(const Geometry& g, bool parity_odd, const SeriesControl& control) {
    cd sum{0.0, 0.0}, comp{0.0, 0.0};
    long used = 0;
    double correction = 0.0;
    cd corrected{0.0, 0.0};
    const cd prefactor(0.0, 4.0 * g.omega / g.reduced_w);

    // Convergence checkpoints follow the parallel kernel's block layout
    // (64, then doubling up to 4096) so both stop at the same truncation.
    long gap = 64;
    long next_check = std::min<long>(gap, control.max_terms);

    while (used < control.max_terms) {
        const long m = parity_odd ? 2 * used + 1 : 2 * used + 2;
        const cd y = mode_term(g, m) - comp;
        const cd t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        ++used;

        if (used == next_check) {
            gap = std::min<long>(gap * 2, 4096);
            next_check = std::min(used + gap, control.max_terms);
            const long m_next = (parity_odd ? 2 * used - 1 : 2 * used) + 2;
            correction = (1.0 / g.a) * 0.25 * detail::trigamma(0.5 * static_cast<double>(m_next));
            corrected = sum - correction;

            const double q_last = g.vf_over_c *
                                  std::hypot(constants::pi * static_cast<double>(m) / g.reduced_w,
                                             std::sqrt(g.qz_sq));
            const double eps_mag =
                std::abs(epsilon_transverse({q_last, g.omega, g.eps_coll}));
            const double shift =
                g.omega * g.omega * (2.0 + eps_mag) + g.qz_sq;
            const double m3 = static_cast<double>(m_next) * static_cast<double>(m_next) *
                              static_cast<double>(m_next);
            if (shift / (g.a * g.a * m3) <=
                control.rel_tol * std::max(std::abs(corrected), 1e-300))
                return {prefactor * corrected, used, std::abs(prefactor) * correction};
        }
    }
    throw ConvergenceError("reference impedance series hit max_terms", prefactor * corrected,
                           used, std::abs(prefactor) * correction);
}

} // namespace

ImpedanceResult impedance_antisymmetric(const MetalParameters& metal,
                                        const StackConfiguration& stack,
                                        const IncidentWave& wave,
                                        const SeriesControl& control) {
    validate(control);
    return serial_sum(geometry(metal, stack, wave), true, control);
}

ImpedanceResult impedance_symmetric(const MetalParameters& metal,
                                    const StackConfiguration& stack,
                                    const IncidentWave& wave,
                                    const SeriesControl& control) {
    validate(control);
    const Geometry g = geometry(metal, stack, wave);
    const double q10 = g.vf_over_c * std::sqrt(g.qz_sq);
    const cd eps0 = epsilon_transverse({q10, g.omega, g.eps_coll});
    const cd den0 = g.omega * g.omega * eps0 - g.qz_sq;
    if (std::abs(den0) < 1e-300)
        throw ResonanceError("mode denominator vanished at m=0", 0);

    ImpedanceResult even = serial_sum(g, false, control);
    const cd prefactor(0.0, 4.0 * g.omega / g.reduced_w);
    even.z += prefactor * (0.5 / den0);
    even.terms_used += 1;
    return even;
}

cd brute_force_impedance(const MetalParameters& metal, const StackConfiguration& stack,
                         const IncidentWave& wave, bool antisymmetric, long terms) {
    const Geometry g = geometry(metal, stack, wave);
    cd sum{0.0, 0.0}, comp{0.0, 0.0};
    for (long n = 1; n <= terms; ++n) {
        const long m = antisymmetric ? 2 * n - 1 : 2 * n;
        const cd y = mode_term(g, m) - comp;
        const cd t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    const cd prefactor(0.0, 4.0 * g.omega / g.reduced_w);
    if (antisymmetric) return prefactor * sum;

    const double q10 = g.vf_over_c * std::sqrt(g.qz_sq);
    const cd eps0 = epsilon_transverse({q10, g.omega, g.eps_coll});
    const cd den0 = g.omega * g.omega * eps0 - g.qz_sq;
    return prefactor * (sum + 0.5 / den0);
}

} // namespace swfilm::reference
