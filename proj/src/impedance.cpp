#include "swfilm/impedance.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <vector>

namespace swfilm {

using cd = std::complex<double>;

namespace detail {

double trigamma(double x) {
    double acc = 0.0;
    while (x < 10.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    // psi'(x) = 1/x + 1/2x^2 + 1/6x^3 - 1/30x^5 + 1/42x^7 - ...
    const double ix = 1.0 / x;
    const double ix2 = ix * ix;
    return acc + ix * (1.0 + ix * (0.5 + ix * (1.0 / 6.0 - ix2 * (1.0 / 30.0 - ix2 / 42.0))));
}

} // namespace detail

namespace {

struct KahanSum {
    cd sum{0.0, 0.0};
    cd comp{0.0, 0.0};
    void add(cd v) {
        const cd y = v - comp;
        const cd t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Fixed-order pairwise reduction; independent of thread count.
cd pairwise(const cd* data, long n) {
    if (n <= 4) {
        cd s{0.0, 0.0};
        for (long i = 0; i < n; ++i) s += data[i];
        return s;
    }
    const long half = n / 2;
    return pairwise(data, half) + pairwise(data + half, n - half);
}

struct SeriesContext {
    double omega;
    double eps_coll;
    double eps1;
    double theta;
    double reduced_w;
    double vf_over_c;
    double qz_sq; // eps1 Omega^2 sin^2(theta)

    cd term(long m, long* resonant) const {
        const double qx = constants::pi * static_cast<double>(m) / reduced_w;
        const double Q_sq = qx * qx + qz_sq;
        const double q1 = vf_over_c * std::sqrt(Q_sq);
        const cd eps = epsilon_transverse({q1, omega, eps_coll});
        const cd den = omega * omega * eps - Q_sq;
        if (std::abs(den) < 1e-300) {
            *resonant = m;
            return cd{0.0, 0.0};
        }
        return 1.0 / den;
    }
};

std::string describe_point(const SeriesContext& ctx) {
    std::ostringstream os;
    os << "omega_ratio=" << ctx.omega << " theta=" << ctx.theta
       << " W=" << ctx.reduced_w << " eps_coll=" << ctx.eps_coll;
    return os.str();
}

// Adaptive one-parity mode sum with analytic tail correction. parity_odd
// selects m = 1,3,5,... versus m = 2,4,6,...; the n = 0 term is not
// handled here. Returns the corrected sum without the 4 i Omega / W
// prefactor; *tail_out receives the correction magnitude (same scale).
cd adaptive_mode_sum(const SeriesContext& ctx, bool parity_odd,
                     const SeriesControl& control, long* terms_out, double* tail_out) {
    const double a = constants::pi * constants::pi / (ctx.reduced_w * ctx.reduced_w);
    const double w2_pi2 = 1.0 / a;

    KahanSum acc;
    std::vector<cd> buffer;
    long used = 0;
    long block = 64;
    cd corrected{0.0, 0.0};
    double correction = 0.0;

    while (used < control.max_terms) {
        block = std::min(block, control.max_terms - used);
        buffer.resize(static_cast<size_t>(block));

        long resonant_mode = -1;
        std::exception_ptr first_error = nullptr;
        long first_error_idx = control.max_terms + 1;

#pragma omp parallel for schedule(static) if (block >= 512)
        for (long i = 0; i < block; ++i) {
            const long m = parity_odd ? 2 * (used + i) + 1 : 2 * (used + i) + 2;
            try {
                long res = -1;
                buffer[static_cast<size_t>(i)] = ctx.term(m, &res);
                if (res >= 0) {
#pragma omp critical(swfilm_series_err)
                    {
                        if (resonant_mode < 0 || res < resonant_mode) resonant_mode = res;
                    }
                }
            } catch (...) {
#pragma omp critical(swfilm_series_err)
                {
                    if (i < first_error_idx) {
                        first_error_idx = i;
                        first_error = std::current_exception();
                    }
                }
            }
        }

        if (first_error) std::rethrow_exception(first_error);
        if (resonant_mode >= 0)
            throw ResonanceError("mode denominator vanished at m=" + std::to_string(resonant_mode) +
                                     " (" + describe_point(ctx) + ")",
                                 resonant_mode);

        acc.add(pairwise(buffer.data(), block));
        used += block;

        const long m_last = parity_odd ? 2 * used - 1 : 2 * used;
        const long m_next = m_last + 2;

        // Analytic tail: sum over the parity class of -(W/pi)^2 / m^2.
        correction = w2_pi2 * 0.25 * detail::trigamma(0.5 * static_cast<double>(m_next));
        corrected = acc.sum - correction;

        // Residual after the correction: the neglected Omega^2 eps_tr - Q_z^2
        // shift contributes O(1/m^3); bound it with a conservative prefactor.
        const double qx = constants::pi * static_cast<double>(m_last) / ctx.reduced_w;
        const double q_last = ctx.vf_over_c * std::hypot(qx, std::sqrt(ctx.qz_sq));
        const double eps_mag = std::abs(epsilon_transverse({q_last, ctx.omega, ctx.eps_coll}));
        const double shift = ctx.omega * ctx.omega * (1.0 + eps_mag) + ctx.qz_sq +
                             ctx.omega * ctx.omega;
        const double m3 = static_cast<double>(m_next) * static_cast<double>(m_next) *
                          static_cast<double>(m_next);
        const double residual = shift / (a * a * m3);

        if (residual <= control.rel_tol * std::max(std::abs(corrected), 1e-300)) {
            *terms_out = used;
            *tail_out = correction;
            return corrected;
        }

        block = std::min<long>(block * 2, 4096);
    }

    *terms_out = used;
    *tail_out = correction;
    const cd prefactor(0.0, 4.0 * ctx.omega / ctx.reduced_w);
    throw ConvergenceError("impedance series hit max_terms=" + std::to_string(control.max_terms) +
                               " before reaching rel_tol (" + describe_point(ctx) + ")",
                           prefactor * corrected, used, std::abs(prefactor) * correction);
}

SeriesContext make_context(const MetalParameters& metal, const StackConfiguration& stack,
                           const IncidentWave& wave) {
    validate(metal);
    validate(stack);
    validate(wave);
    const double w = reduced_thickness(metal, stack.d_nm);
    const double st = std::sin(wave.theta);
    return {wave.omega_ratio,
            metal.eps_coll,
            stack.eps1,
            wave.theta,
            w,
            metal.v_f / constants::c_cgs,
            stack.eps1 * wave.omega_ratio * wave.omega_ratio * st * st};
}

} // namespace

ImpedanceResult impedance_antisymmetric(const MetalParameters& metal,
                                        const StackConfiguration& stack,
                                        const IncidentWave& wave,
                                        const SeriesControl& control) {
    validate(control);
    const SeriesContext ctx = make_context(metal, stack, wave);
    long terms = 0;
    double tail = 0.0;
    const cd sum = adaptive_mode_sum(ctx, true, control, &terms, &tail);
    const cd prefactor(0.0, 4.0 * ctx.omega / ctx.reduced_w);
    return {prefactor * sum, terms, std::abs(prefactor) * tail};
}

ImpedanceResult impedance_symmetric(const MetalParameters& metal,
                                    const StackConfiguration& stack,
                                    const IncidentWave& wave,
                                    const SeriesControl& control) {
    validate(control);
    const SeriesContext ctx = make_context(metal, stack, wave);

    // Unpaired n = 0 term, half the weight of the paired modes.
    const double q10 = ctx.vf_over_c * std::sqrt(ctx.qz_sq);
    const cd eps0 = epsilon_transverse({q10, ctx.omega, ctx.eps_coll});
    const cd den0 = ctx.omega * ctx.omega * eps0 - ctx.qz_sq;
    if (std::abs(den0) < 1e-300)
        throw ResonanceError("mode denominator vanished at m=0 (" + describe_point(ctx) + ")", 0);

    long terms = 0;
    double tail = 0.0;
    const cd prefactor(0.0, 4.0 * ctx.omega / ctx.reduced_w);
    try {
        const cd sum = adaptive_mode_sum(ctx, false, control, &terms, &tail);
        return {prefactor * (sum + 0.5 / den0), terms + 1, std::abs(prefactor) * tail};
    } catch (ConvergenceError& e) {
        e.best_estimate += prefactor * (0.5 / den0);
        e.terms_used += 1;
        throw;
    }
}

ImpedancePair impedance_pair(const MetalParameters& metal, const StackConfiguration& stack,
                             const IncidentWave& wave, const SeriesControl& control) {
    const ImpedanceResult z1 = impedance_antisymmetric(metal, stack, wave, control);
    const ImpedanceResult z2 = impedance_symmetric(metal, stack, wave, control);
    return {z1.z, z2.z, z1.terms_used + z2.terms_used,
            std::max(z1.tail_bound, z2.tail_bound)};
}

} // namespace swfilm
