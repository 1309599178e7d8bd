#include "swfilm/optics.hpp"

#include <cmath>
#include <sstream>

namespace swfilm {

using cd = std::complex<double>;

AmplitudePair amplitude_factors(const ImpedancePair& z, double eps1, double theta) {
    const double ct = std::cos(theta);
    if (!(ct > 0.0))
        throw DomainError("amplitude_factors: cos(theta) must be positive");
    if (!(eps1 > 0.0))
        throw DomainError("amplitude_factors: eps1 must be positive");

    const double scale = std::sqrt(eps1) * ct;
    const auto factor = [&](cd zj, const char* name) {
        const cd den = scale * zj + 1.0;
        if (std::abs(den) < 1e-300)
            throw DegenerateError(std::string("amplitude_factors: pole in ") + name +
                                  " (sqrt(eps1) cos(theta) Z == -1)");
        return (scale * zj - 1.0) / den;
    };
    const cd p1 = factor(z.z1, "p1");
    const cd p2 = factor(z.z2, "p2");
    return {p1, p2, 0.5 * (p1 + p2)};
}

namespace {

cd reduction_denominator(const AmplitudePair& p, cd u, double ct) {
    return u * (1.0 + p.p_bar) + ct * (1.0 - p.p_bar);
}

} // namespace

double reflectance(const AmplitudePair& p, double eps12, double theta) {
    if (!(eps12 > 0.0))
        throw DomainError("reflectance: eps12 must be positive");
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    const cd u = normal_root(eps12 - st * st);
    const cd den = reduction_denominator(p, u, ct);
    if (std::abs(den) < 1e-300)
        throw DegenerateError("reflectance: degenerate configuration, vanishing denominator");
    const cd p12 = p.p1 * p.p2;
    const cd num = u * (p.p_bar + p12) + ct * (p.p_bar - p12);
    return std::norm(num / den);
}

double transmittance(const AmplitudePair& p, double eps12, double theta) {
    if (!(eps12 > 0.0))
        throw DomainError("transmittance: eps12 must be positive");
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    const cd u = normal_root(eps12 - st * st);
    const cd den = reduction_denominator(p, u, ct);
    if (std::abs(den) < 1e-300)
        throw DegenerateError("transmittance: degenerate configuration, vanishing denominator");
    return ct * u.real() * std::norm((p.p2 - p.p1) / den);
}

OpticalCoefficients coefficients_from(const ImpedancePair& z, const StackConfiguration& stack,
                                      const IncidentWave& wave) {
    const AmplitudePair p = amplitude_factors(z, stack.eps1, wave.theta);
    const double eps12 = permittivity_ratio(stack);
    const double r = reflectance(p, eps12, wave.theta);
    const double t = transmittance(p, eps12, wave.theta);
    const double a = absorptance(t, r);
    return {t, r, a, std::abs(1.0 - t - r - a)};
}

OpticalCoefficients coefficients(const MetalParameters& metal, const StackConfiguration& stack,
                                 const IncidentWave& wave, const SeriesControl& control) {
    try {
        const ImpedancePair z = impedance_pair(metal, stack, wave, control);
        return coefficients_from(z, stack, wave);
    } catch (Error& e) {
        std::ostringstream ctx;
        ctx << "coefficients(omega_ratio=" << wave.omega_ratio << ", d_nm=" << stack.d_nm
            << ", theta=" << wave.theta << ", eps1=" << stack.eps1 << ", eps2=" << stack.eps2
            << ")";
        e.add_context(ctx.str());
        throw;
    }
}

} // namespace swfilm
