// Keldysh-Green function of the cavity assembled from GFs and sources.
#pragma once

#include "cavkg/sources.hpp"

namespace cavkg {

// Amplitudes D^{nu nu'} of the expansion
//   D^K(z,z') = sum_{nu nu'} D^{nu nu'} e^{i (nu qz z - nu' qz* z')}.
struct KgAmplitudes {
    Weyl mm, mp, pm, pp;
    WaveNumbers wn;
    double a = 0.0;

    Weyl value(double z, double zp) const;
    Weyl dz(double z, double zp) const;
    Weyl dzp(double z, double zp) const;
    Weyl dzdzp(double z, double zp) const;

    KgAmplitudes& operator-=(const KgAmplitudes& o);
};

KgAmplitudes kg_amplitudes(const CavityConfig& cfg, const SpectralPoint& pt);

// Free-space KG amplitudes at a uniform temperature (support on the
// propagating sector only).
KgAmplitudes free_kg_amplitudes(const SpectralPoint& pt, double temperature, double a);

// Cavity amplitudes with the free-space KG function at the environment
// temperature subtracted.
KgAmplitudes renormalized_kg_amplitudes(const CavityConfig& cfg, const SpectralPoint& pt,
                                        double environment_temperature);

// KG function via the amplitude expansion.
Weyl kg_function(const CavityConfig& cfg, const SpectralPoint& pt, double z, double zp);

// Same quantity assembled from surface sources,
//   D^K(z,z') = sum_nu D^R(z, nu a/2) P(nu) D^A(nu a/2, z').
// Kept as an independent route for cross-checks.
Weyl kg_function_surface(const CavityConfig& cfg, const SpectralPoint& pt, double z, double zp);

Weyl kg_renormalized(const CavityConfig& cfg, const SpectralPoint& pt, double z, double zp,
                     double environment_temperature);

// Normal (z-) components via analytic derivatives of the amplitude
// expansion; homogeneous (no contact term).
struct KgNormal {
    cplx z_s{}, z_p{};
    cplx s_z{}, p_z{};
    cplx zz{};
};
KgNormal kg_normal_components(const KgAmplitudes& amps, double z, double zp);
KgNormal kg_normal_components(const CavityConfig& cfg, const SpectralPoint& pt, double z,
                              double zp);

}  // namespace cavkg
