// Retarded/advanced Green functions for single-interface and two-plate
// geometries, boundary-condition residuals, and the surface source
// strengths Gamma.
#pragma once

#include <utility>

#include "cavkg/materials.hpp"

namespace cavkg {

// One boundary: material, rest-frame temperature, tangential velocity
// along x.  The lower interface is the frame anchor and must be at rest.
struct InterfaceSpec {
    Material material = Dielectric{};
    double temperature = 0.0;
    double velocity = 0.0;
};

// Two plates with boundaries at z = -a/2 (lower) and z = +a/2 (upper).
struct CavityConfig {
    double gap = 1.0;
    InterfaceSpec lower;
    InterfaceSpec upper;
};

void validate(const CavityConfig& cfg);

enum class Side { lower, upper };

// Lab-frame reflection matrix of an interface (boosted when it slides).
ReflectionMatrix interface_reflection(const InterfaceSpec& spec, const SpectralPoint& pt);

// Cavity retarded GF in amplitude form,
//   D^R(z,z') = Delta^R(z,z') + sum_{nu nu'} C^{nu nu'} e^{i qz (nu z + nu' z')},
// with the analytic z-derivatives used by boundary conditions and the
// normal tensor components.
struct CavityGreens {
    WaveNumbers wn;
    Weyl d0;
    double a = 0.0;
    Weyl r_lower, r_upper;
    Weyl u_pm, u_mp;  // I - R+ R- e^{2i qz a} and the index-swapped partner
    Weyl c_mm, c_mp, c_pm, c_pp;

    Weyl value(double z, double zp) const;
    Weyl dz(double z, double zp) const;
    Weyl dzp(double z, double zp) const;
    Weyl dzdzp(double z, double zp) const;
};

// Assembles the multiple-reflection amplitudes; throws CavityResonanceError
// when |det U| is below the resonance floor.
CavityGreens cavity_greens(const CavityConfig& cfg, const SpectralPoint& pt);

Weyl cavity_retarded(const CavityConfig& cfg, const SpectralPoint& pt, double z, double zp);

// GF above (side = lower) or below (side = upper) a single interface.
Weyl single_interface_retarded(Side side, const Weyl& reflection, const SpectralPoint& pt,
                               double z, double zp, double a);

// Advanced GF from the retarded one with swapped arguments:
// D^A(z,z') = [D^R(z',z)]^dagger.
Weyl advanced_from_retarded(const Weyl& retarded_at_swapped_args);

// Tensor components involving the normal direction, from analytic
// z-derivatives of the amplitude expansion.  zz excludes the contact term
// and requires z != z'.
struct NormalComponents {
    cplx z_s{}, z_p{};  // D_{z lambda}
    cplx s_z{}, p_z{};  // D_{lambda z}
    cplx zz{};
};
NormalComponents normal_components_retarded(const CavityGreens& gf, double z, double zp);

// Boundary-condition residuals i qz^{-1} dz D^R -/+ Y_-/+ D^R at z = -/+a/2.
// Both must vanish for a correctly assembled cavity GF.
std::pair<Weyl, Weyl> boundary_residuals(const CavityConfig& cfg, const SpectralPoint& pt,
                                         double zp);

// Effective surface source strength Gamma = -1/2 (Delta_0^{-1} Y - h.c.);
// antihermitian, symmetric, purely imaginary.
Weyl gamma_surface(const Weyl& admittance_y, const SpectralPoint& pt);

// Gamma of a physical interface, built from the lab-frame admittance.
Weyl interface_gamma(const InterfaceSpec& spec, const SpectralPoint& pt);

// Residual norm of the surface identity
//   sum_nu D^R(z, nu a/2) Gamma^nu D^A(nu a/2, z') = D^R(z,z') - D^A(z,z').
double verify_surface_identity(const CavityConfig& cfg, const SpectralPoint& pt, double z,
                               double zp);

}  // namespace cavkg
