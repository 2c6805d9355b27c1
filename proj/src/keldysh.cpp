#include "cavkg/keldysh.hpp"

#include <cmath>

namespace cavkg {

namespace {

// Exponent of the (nu, nu') amplitude term at (z, z').
cplx term_phase(const WaveNumbers& wn, int nu, int nup, double z, double zp) {
    return std::exp(iu * (double(nu) * wn.qz * z - double(nup) * std::conj(wn.qz) * zp));
}

}  // namespace

Weyl KgAmplitudes::value(double z, double zp) const {
    return mm * term_phase(wn, -1, -1, z, zp) + mp * term_phase(wn, -1, +1, z, zp) +
           pm * term_phase(wn, +1, -1, z, zp) + pp * term_phase(wn, +1, +1, z, zp);
}

Weyl KgAmplitudes::dz(double z, double zp) const {
    const cplx f = iu * wn.qz;
    return mm * (-f * term_phase(wn, -1, -1, z, zp)) + mp * (-f * term_phase(wn, -1, +1, z, zp)) +
           pm * (f * term_phase(wn, +1, -1, z, zp)) + pp * (f * term_phase(wn, +1, +1, z, zp));
}

Weyl KgAmplitudes::dzp(double z, double zp) const {
    const cplx f = -iu * std::conj(wn.qz);
    return mm * (-f * term_phase(wn, -1, -1, z, zp)) + mp * (f * term_phase(wn, -1, +1, z, zp)) +
           pm * (-f * term_phase(wn, +1, -1, z, zp)) + pp * (f * term_phase(wn, +1, +1, z, zp));
}

Weyl KgAmplitudes::dzdzp(double z, double zp) const {
    const cplx fz = iu * wn.qz;
    const cplx fzp = -iu * std::conj(wn.qz);
    return mm * (fz * fzp * term_phase(wn, -1, -1, z, zp)) +
           mp * (-fz * fzp * term_phase(wn, -1, +1, z, zp)) +
           pm * (-fz * fzp * term_phase(wn, +1, -1, z, zp)) +
           pp * (fz * fzp * term_phase(wn, +1, +1, z, zp));
}

KgAmplitudes& KgAmplitudes::operator-=(const KgAmplitudes& o) {
    mm -= o.mm;
    mp -= o.mp;
    pm -= o.pm;
    pp -= o.pp;
    return *this;
}

KgAmplitudes kg_amplitudes(const CavityConfig& cfg, const SpectralPoint& pt) {
    validate(cfg);

    KgAmplitudes out;
    out.wn = wave_numbers(pt);
    out.a = cfg.gap;

    const Weyl r_lower = interface_reflection(cfg.lower, pt).r;
    const Weyl r_upper = interface_reflection(cfg.upper, pt).r;

    const cplx x = std::exp(iu * out.wn.qz * cfg.gap);
    const cplx x2 = x * x;
    const Weyl u_pm = Weyl::identity() - r_upper * r_lower * x2;
    const Weyl u_mp = Weyl::identity() - r_lower * r_upper * x2;
    if (std::abs(u_pm.det()) < tol::resonance_floor)
        throw CavityResonanceError("kg_amplitudes: guided-mode pole, |det U| below floor");

    const Weyl gamma_lower = interface_emission(cfg.lower, Side::lower, pt, cfg.gap);
    const Weyl gamma_upper = interface_emission(cfg.upper, Side::upper, pt, cfg.gap);

    const Weyl u_mp_inv = u_mp.inverse();
    const Weyl u_pm_inv = u_pm.inverse();
    const Weyl t_lower = u_mp_inv * gamma_lower * u_mp_inv.adjoint();
    const Weyl t_upper = u_pm_inv * gamma_upper * u_pm_inv.adjoint();

    const double w2 = std::exp(-2.0 * out.wn.qz.imag() * cfg.gap);
    out.mm = t_upper + w2 * (r_upper * t_lower * r_upper.adjoint());
    out.pp = t_lower + w2 * (r_lower * t_upper * r_lower.adjoint());
    out.mp = r_upper * t_lower * x + t_upper * r_lower.adjoint() * std::conj(x);
    out.pm = r_lower * t_upper * x + t_lower * r_upper.adjoint() * std::conj(x);
    return out;
}

KgAmplitudes free_kg_amplitudes(const SpectralPoint& pt, double temperature, double a) {
    KgAmplitudes out;
    out.wn = wave_numbers(pt);
    out.a = a;
    const Weyl zero_r = Weyl::zero();
    out.mm = emission_matrix(zero_r, free_space_source(pt, +1, temperature), pt, a);
    out.pp = emission_matrix(zero_r, free_space_source(pt, -1, temperature), pt, a);
    out.mp = Weyl::zero();
    out.pm = Weyl::zero();
    return out;
}

KgAmplitudes renormalized_kg_amplitudes(const CavityConfig& cfg, const SpectralPoint& pt,
                                        double environment_temperature) {
    KgAmplitudes out = kg_amplitudes(cfg, pt);
    out -= free_kg_amplitudes(pt, environment_temperature, cfg.gap);
    return out;
}

Weyl kg_function(const CavityConfig& cfg, const SpectralPoint& pt, double z, double zp) {
    return kg_amplitudes(cfg, pt).value(z, zp);
}

Weyl kg_function_surface(const CavityConfig& cfg, const SpectralPoint& pt, double z, double zp) {
    const auto gf = cavity_greens(cfg, pt);
    const double a = cfg.gap;

    const Weyl p_lower = interface_source(cfg.lower, Side::lower, pt);
    const Weyl p_upper = interface_source(cfg.upper, Side::upper, pt);

    Weyl out = gf.value(z, -a / 2) * p_lower * advanced_from_retarded(gf.value(zp, -a / 2));
    out += gf.value(z, +a / 2) * p_upper * advanced_from_retarded(gf.value(zp, +a / 2));
    return out;
}

Weyl kg_renormalized(const CavityConfig& cfg, const SpectralPoint& pt, double z, double zp,
                     double environment_temperature) {
    return renormalized_kg_amplitudes(cfg, pt, environment_temperature).value(z, zp);
}

KgNormal kg_normal_components(const KgAmplitudes& amps, double z, double zp) {
    const double q = amps.wn.q;
    const cplx qz2 = amps.wn.qz * amps.wn.qz;

    KgNormal nc;
    if (q == 0.0)
        return nc;

    const Weyl ddz = amps.dz(z, zp);
    const Weyl ddzp = amps.dzp(z, zp);
    nc.z_s = iu * q / qz2 * ddz.ps;
    nc.z_p = iu * q / qz2 * ddz.pp;
    nc.s_z = -iu * q / qz2 * ddzp.sp;
    nc.p_z = -iu * q / qz2 * ddzp.pp;
    nc.zz = q * q / (qz2 * qz2) * amps.dzdzp(z, zp).pp;
    return nc;
}

KgNormal kg_normal_components(const CavityConfig& cfg, const SpectralPoint& pt, double z,
                              double zp) {
    return kg_normal_components(kg_amplitudes(cfg, pt), z, zp);
}

}  // namespace cavkg
