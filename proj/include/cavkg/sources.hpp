// Photon source strengths: free-space distributions, local-equilibrium
// interface sources with Doppler shift, and the emission matrices gamma_nu.
#pragma once

#include <functional>

#include "cavkg/greens.hpp"

namespace cavkg {

// coth(omega_eff / 2T); sgn(omega_eff) at T = 0.
double thermal_factor(double omega_eff, double temperature);

// Comoving frequency gamma (omega - v qx).
double doppler_frequency(const SpectralPoint& pt, double v);

// Free-space source strength Gamma^0 = -Delta_0^{-1} Theta(omega^2 - q^2).
Weyl gamma_free(const SpectralPoint& pt);

// Mode occupation hook N(qx, qy, kz) for non-thermal free-space states.
using PhotonNumbers = std::function<Weyl(double qx, double qy, double kz)>;

// Free-space photon source P_0(Omega, nu); nu = +1 selects photons moving
// toward -z (incident from above) and nu = -1 the opposite.
Weyl free_space_source(const SpectralPoint& pt, int nu, double temperature);
Weyl free_space_source(const SpectralPoint& pt, int nu, const PhotonNumbers& numbers);

// Local-equilibrium interface source P(nu) = Gamma^nu coth(omega_eff / 2T)
// with omega_eff Doppler-shifted for a sliding upper interface.
Weyl interface_source(const InterfaceSpec& spec, Side side, const SpectralPoint& pt);

// Emission matrix gamma_nu = e^{-Im qz a} (I+R) Delta_0 P Delta_0^dag (I+R^dag).
Weyl emission_matrix(const Weyl& reflection, const Weyl& source, const SpectralPoint& pt,
                     double a);

// Diagonal closed form for plates at rest:
//   propagating: gamma_sigma = (-2 pi i g_sigma eta / v) (1 - |R_sigma|^2)
//   evanescent:  gamma_sigma = (-4 pi i g_sigma eta e^{-kappa a} / kappa) Im R_sigma
Weyl emission_matrix_diagonal(const Weyl& reflection, double eta, const SpectralPoint& pt,
                              double a);

// gamma_nu of a physical interface; identically zero for a perfect mirror.
Weyl interface_emission(const InterfaceSpec& spec, Side side, const SpectralPoint& pt, double a);

}  // namespace cavkg
