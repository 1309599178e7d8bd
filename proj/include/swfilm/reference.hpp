#pragma once

#include <complex>

#include "swfilm/impedance.hpp"

// Serial reference implementations, kept deliberately simple: a straight
// compensated loop with no blocking, no OpenMP, no adaptivity beyond the
// same stopping rule. Used by the tests to pin down the parallel kernels
// and by the benchmark as the single-thread baseline.

namespace swfilm::reference {

ImpedanceResult impedance_antisymmetric(const MetalParameters& metal,
                                        const StackConfiguration& stack,
                                        const IncidentWave& wave,
                                        const SeriesControl& control);

ImpedanceResult impedance_symmetric(const MetalParameters& metal,
                                    const StackConfiguration& stack,
                                    const IncidentWave& wave,
                                    const SeriesControl& control);

// Plain truncated sum of the first `terms` modes of one parity class,
// no tail correction, no adaptivity. The brute-force yardstick.
std::complex<double> brute_force_impedance(const MetalParameters& metal,
                                           const StackConfiguration& stack,
                                           const IncidentWave& wave,
                                           bool antisymmetric, long terms);

} // namespace swfilm::reference
