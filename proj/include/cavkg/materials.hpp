// Boundary models: reflection matrices, surface admittances, and the
// Lorentz-boosted reflection matrix of a sliding interface.
#pragma once

#include <variant>

#include "cavkg/spectral.hpp"

namespace cavkg {

// Drude conductivity parameters; impedance zeta = 1/sqrt(eps_Drude).
struct DrudeImpedance {
    double plasma_frequency = 0.0;
    double relaxation_time = 0.0;
};

// Constant-index dielectric with optional small dissipation:
// eps(omega) = n^2 + i delta sgn(omega).
struct Dielectric {
    double n = 1.0;
    double delta = 0.0;
};

struct Metal {
    DrudeImpedance impedance;
};

struct PerfectMirror {};

using Material = std::variant<Dielectric, Metal, PerfectMirror>;

// Reflection matrix together with the point it was evaluated at.
struct ReflectionMatrix {
    Weyl r;
    SpectralPoint at;
};

cplx dielectric_permittivity(const Dielectric& mat, double omega);
cplx drude_permittivity(const DrudeImpedance& drude, double omega);
cplx drude_impedance(const DrudeImpedance& drude, double omega);

// Wave number inside a medium, q_ze = sqrt(eps omega^2 - q^2), with
// Im q_ze >= 0 and, for a real positive radicand, sgn(Re q_ze) = sgn(omega).
cplx medium_wave_number(cplx eps, const SpectralPoint& pt);

// Rest-frame (diagonal) reflection matrices.
ReflectionMatrix dielectric_reflection(const Dielectric& mat, const SpectralPoint& pt);
ReflectionMatrix metal_reflection(const Metal& mat, const SpectralPoint& pt);
ReflectionMatrix rest_reflection(const Material& mat, const SpectralPoint& pt);

double lorentz_gamma(double v);

// Boost of the tangential spectral coordinate:
// omega' = gamma (omega - v qx), qx' = gamma (qx - v omega), qy' = qy.
SpectralPoint lorentz_spectral(const SpectralPoint& pt, double v);

// Polarization mixing matrix O of the surface-current transformation.
// Requires q > 0 and q' > 0; at qy = 0 callers use the diagonal limit.
Weyl boost_mixing_matrix(const SpectralPoint& pt, double v);

// Lab-frame reflection matrix built from the rest-frame diagonal matrix
// evaluated at the boosted point.  rest_r must be rest_reflection(mat,
// lorentz_spectral(pt, v)).
ReflectionMatrix boosted_reflection(const ReflectionMatrix& rest_r, const SpectralPoint& pt,
                                    double v);

// Convenience: rest or boosted matrix depending on v.
ReflectionMatrix reflection_matrix(const Material& mat, const SpectralPoint& pt, double v = 0.0);

// Surface admittance Y = (I + R)^{-1} (I - R); identity for a free boundary.
Weyl admittance(const Weyl& reflection);

// Solves for the plasma frequency that gives the requested field decay
// length in the metal at (omega_ref, q = 0).  Bisection to 1e-10 relative.
double calibrate_drude_plasma_frequency(double relaxation_time, double decay_length,
                                        double omega_ref = 1.0);

}  // namespace cavkg
