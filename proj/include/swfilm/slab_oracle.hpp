#pragma once

#include "swfilm/optics.hpp"
#include "swfilm/units.hpp"

// Independent validation path: classical Fresnel coefficients for a
// homogeneous slab with the local Drude permittivity between the two
// dielectrics. Shares nothing with the impedance pipeline beyond complex
// arithmetic and the units module; the kinetic result must converge to
// this one as the Fermi velocity goes to zero.

namespace swfilm {

OpticalCoefficients fresnel_slab(const MetalParameters& metal, const StackConfiguration& stack,
                                 const IncidentWave& wave);

} // namespace swfilm
