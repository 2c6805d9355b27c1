#include "cavkg/sources.hpp"

#include <cmath>

namespace cavkg {

double thermal_factor(double omega_eff, double temperature) {
    if (temperature < 0.0)
        throw DomainError("thermal_factor: temperature must be >= 0");
    if (temperature == 0.0)
        return omega_eff > 0.0 ? 1.0 : (omega_eff < 0.0 ? -1.0 : 0.0);
    return 1.0 / std::tanh(omega_eff / (2.0 * temperature));
}

double doppler_frequency(const SpectralPoint& pt, double v) {
    return lorentz_gamma(v) * (pt.omega - v * pt.qx);
}

Weyl gamma_free(const SpectralPoint& pt) {
    const auto wn = wave_numbers(pt);
    if (wn.sector == Sector::evanescent)
        return Weyl::zero();
    return -delta0_inverse(pt);
}

Weyl free_space_source(const SpectralPoint& pt, int /*nu*/, double temperature) {
    // Isotropic thermal state: the same source on both free boundaries.
    return thermal_factor(pt.omega, temperature) * gamma_free(pt);
}

Weyl free_space_source(const SpectralPoint& pt, int nu, const PhotonNumbers& numbers) {
    const auto wn = wave_numbers(pt);
    if (wn.sector == Sector::evanescent)
        return Weyl::zero();
    // N_nu(Omega) = I sgn(omega) + 2[Theta(omega) N(q, -nu|qz|) - (Omega -> -Omega)]
    const double kz = -nu * std::abs(wn.qz);
    Weyl n_nu = Weyl::identity() * (pt.omega > 0.0 ? 1.0 : -1.0);
    if (pt.omega > 0.0)
        n_nu += 2.0 * numbers(pt.qx, pt.qy, kz);
    else
        n_nu -= 2.0 * numbers(-pt.qx, -pt.qy, kz);
    return n_nu * gamma_free(pt);
}

Weyl interface_source(const InterfaceSpec& spec, Side side, const SpectralPoint& pt) {
    const double omega_eff =
        side == Side::upper ? doppler_frequency(pt, spec.velocity) : pt.omega;
    return thermal_factor(omega_eff, spec.temperature) * interface_gamma(spec, pt);
}

Weyl emission_matrix(const Weyl& reflection, const Weyl& source, const SpectralPoint& pt,
                     double a) {
    const auto wn = wave_numbers(pt);
    const Weyl d0 = delta0(pt);
    const Weyl one_plus_r = Weyl::identity() + reflection;
    const double damp = std::exp(-wn.qz.imag() * a);
    return damp * (one_plus_r * d0 * source * d0.adjoint() * one_plus_r.adjoint());
}

Weyl emission_matrix_diagonal(const Weyl& reflection, double eta, const SpectralPoint& pt,
                              double a) {
    const auto wn = wave_numbers(pt);
    const Weyl g = g_matrix(pt);
    if (wn.sector == Sector::propagating) {
        const double v = wn.qz.real();
        const cplx pref = -2.0 * M_PI * iu * eta / v;
        return Weyl::diagonal(pref * g.ss * (1.0 - std::norm(reflection.ss)),
                              pref * g.pp * (1.0 - std::norm(reflection.pp)));
    }
    const double kappa = wn.qz.imag();
    const cplx pref = -4.0 * M_PI * iu * eta * std::exp(-kappa * a) / kappa;
    return Weyl::diagonal(pref * g.ss * reflection.ss.imag(),
                          pref * g.pp * reflection.pp.imag());
}

Weyl interface_emission(const InterfaceSpec& spec, Side side, const SpectralPoint& pt,
                        double a) {
    if (std::holds_alternative<PerfectMirror>(spec.material))
        return Weyl::zero();  // |R| = 1 and real on both sectors: no emission
    const Weyl r = interface_reflection(spec, pt).r;
    return emission_matrix(r, interface_source(spec, side, pt), pt, a);
}

}  // namespace cavkg
