#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "swfilm/csv.hpp"
#include "swfilm/reference.hpp"
#include "swfilm/sweep.hpp"

// Compares the OpenMP drivers against their serial references on a
// figure-sized workload and checks that both produce identical results.

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n");
#endif

    const swfilm::ModelPoint fixed{swfilm::sodium(), {1.0, 4.0, 100.0}, 0.0, 1.0};
    const swfilm::SeriesControl control{};

    // Frequency sweep, the common figure workload.
    {
        const swfilm::SweepSpec spec{{swfilm::SweepAxis::omega_ratio, 0.01, 2.5, 800}, fixed};

        auto t0 = clock_type::now();
        const auto serial = swfilm::run_sweep_serial(spec, control, false);
        const double ts = seconds_since(t0);

        t0 = clock_type::now();
        const auto parallel = swfilm::run_sweep(spec, control, false);
        const double tp = seconds_since(t0);

        const bool identical =
            swfilm::csv_document(serial, false) == swfilm::csv_document(parallel, false);
        std::printf("sweep 800 pts:   serial %.3f s   parallel %.3f s   speedup %.2fx   %s\n", ts,
                    tp, ts / tp, identical ? "outputs identical" : "OUTPUT MISMATCH");
    }

    // Single long impedance series (tight tolerance forces large blocks).
    {
        const swfilm::SeriesControl tight{1e-13, 200000};
        const swfilm::IncidentWave wave{0.5, 0.0};
        const swfilm::StackConfiguration stack{1.0, 4.0, 100.0};
        const int reps = 200;

        auto t0 = clock_type::now();
        swfilm::ImpedanceResult ref{};
        for (int i = 0; i < reps; ++i)
            ref = swfilm::reference::impedance_antisymmetric(swfilm::sodium(), stack, wave, tight);
        const double ts = seconds_since(t0);

        t0 = clock_type::now();
        swfilm::ImpedanceResult prod{};
        for (int i = 0; i < reps; ++i)
            prod = swfilm::impedance_antisymmetric(swfilm::sodium(), stack, wave, tight);
        const double tp = seconds_since(t0);

        const double rel = std::abs(prod.z - ref.z) / std::abs(ref.z);
        std::printf("series x%d:     serial %.3f s   parallel %.3f s   speedup %.2fx   "
                    "rel diff %.2e (%ld terms)\n",
                    reps, ts, tp, ts / tp, rel, prod.terms_used);
    }

    // Brute-force yardstick cost, for scale.
    {
        const swfilm::IncidentWave wave{0.5, 0.0};
        const swfilm::StackConfiguration stack{1.0, 4.0, 100.0};
        auto t0 = clock_type::now();
        const auto z = swfilm::reference::brute_force_impedance(swfilm::sodium(), stack, wave,
                                                                true, 1000000);
        const double tb = seconds_since(t0);
        std::printf("brute 1e6 terms: %.3f s   (|Z| = %.6f)\n", tb, std::abs(z));
    }
    return 0;
}
