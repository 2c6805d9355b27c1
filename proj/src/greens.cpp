#include "cavkg/greens.hpp"

#include <cmath>

namespace cavkg {

void validate(const CavityConfig& cfg) {
    if (!(cfg.gap > 0.0))
        throw DomainError("CavityConfig: gap must be positive");
    if (cfg.lower.velocity != 0.0)
        throw DomainError("CavityConfig: lower interface defines the lab frame, velocity = 0");
    if (std::abs(cfg.upper.velocity) >= 1.0)
        throw DomainError("CavityConfig: |velocity| must be < 1");
    if (cfg.lower.temperature < 0.0 || cfg.upper.temperature < 0.0)
        throw DomainError("CavityConfig: temperatures must be >= 0");
}

ReflectionMatrix interface_reflection(const InterfaceSpec& spec, const SpectralPoint& pt) {
    return reflection_matrix(spec.material, pt, spec.velocity);
}

namespace {

void check_gap_coordinate(double z, double a, const char* where) {
    if (z < -a / 2 - tol::domain_slack || z > a / 2 + tol::domain_slack)
        throw DomainError(std::string(where) + ": z outside the gap");
}

}  // namespace

CavityGreens cavity_greens(const CavityConfig& cfg, const SpectralPoint& pt) {
    validate(cfg);

    CavityGreens gf;
    gf.wn = wave_numbers(pt);
    gf.d0 = delta0(pt);
    gf.a = cfg.gap;
    gf.r_lower = interface_reflection(cfg.lower, pt).r;
    gf.r_upper = interface_reflection(cfg.upper, pt).r;

    const cplx x = std::exp(iu * gf.wn.qz * gf.a);
    const cplx x2 = x * x;
    gf.u_pm = Weyl::identity() - gf.r_upper * gf.r_lower * x2;
    gf.u_mp = Weyl::identity() - gf.r_lower * gf.r_upper * x2;
    if (std::abs(gf.u_pm.det()) < tol::resonance_floor)
        throw CavityResonanceError("cavity_greens: guided-mode pole, |det U| below floor");

    const Weyl u_pm_inv = gf.u_pm.inverse();
    const Weyl u_mp_inv = gf.u_mp.inverse();
    gf.c_mm = u_pm_inv * gf.r_upper * gf.d0 * x;
    gf.c_mp = u_pm_inv * gf.r_upper * gf.r_lower * gf.d0 * x2;
    gf.c_pp = u_mp_inv * gf.r_lower * gf.d0 * x;
    gf.c_pm = u_mp_inv * gf.r_lower * gf.r_upper * gf.d0 * x2;
    return gf;
}

Weyl CavityGreens::value(double z, double zp) const {
    check_gap_coordinate(z, a, "CavityGreens::value");
    check_gap_coordinate(zp, a, "CavityGreens::value");
    const cplx qz = wn.qz;
    Weyl out = d0 * std::exp(iu * qz * std::abs(z - zp));
    out += c_mm * std::exp(iu * qz * (-z - zp));
    out += c_mp * std::exp(iu * qz * (-z + zp));
    out += c_pm * std::exp(iu * qz * (z - zp));
    out += c_pp * std::exp(iu * qz * (z + zp));
    return out;
}

Weyl CavityGreens::dz(double z, double zp) const {
    const cplx qz = wn.qz;
    const double sgn = z >= zp ? 1.0 : -1.0;
    Weyl out = d0 * (iu * qz * sgn * std::exp(iu * qz * std::abs(z - zp)));
    out += c_mm * (-iu * qz * std::exp(iu * qz * (-z - zp)));
    out += c_mp * (-iu * qz * std::exp(iu * qz * (-z + zp)));
    out += c_pm * (iu * qz * std::exp(iu * qz * (z - zp)));
    out += c_pp * (iu * qz * std::exp(iu * qz * (z + zp)));
    return out;
}

Weyl CavityGreens::dzp(double z, double zp) const {
    const cplx qz = wn.qz;
    const double sgn = z >= zp ? 1.0 : -1.0;
    Weyl out = d0 * (-iu * qz * sgn * std::exp(iu * qz * std::abs(z - zp)));
    out += c_mm * (-iu * qz * std::exp(iu * qz * (-z - zp)));
    out += c_mp * (iu * qz * std::exp(iu * qz * (-z + zp)));
    out += c_pm * (-iu * qz * std::exp(iu * qz * (z - zp)));
    out += c_pp * (iu * qz * std::exp(iu * qz * (z + zp)));
    return out;
}

Weyl CavityGreens::dzdzp(double z, double zp) const {
    const cplx qz = wn.qz;
    const cplx qz2 = qz * qz;
    Weyl out = d0 * (qz2 * std::exp(iu * qz * std::abs(z - zp)));
    out += c_mm * (-qz2 * std::exp(iu * qz * (-z - zp)));
    out += c_mp * (qz2 * std::exp(iu * qz * (-z + zp)));
    out += c_pm * (qz2 * std::exp(iu * qz * (z - zp)));
    out += c_pp * (-qz2 * std::exp(iu * qz * (z + zp)));
    return out;
}

Weyl cavity_retarded(const CavityConfig& cfg, const SpectralPoint& pt, double z, double zp) {
    return cavity_greens(cfg, pt).value(z, zp);
}

Weyl single_interface_retarded(Side side, const Weyl& reflection, const SpectralPoint& pt,
                               double z, double zp, double a) {
    const auto wn = wave_numbers(pt);
    const Weyl d0 = delta0(pt);
    if (side == Side::lower) {
        if (z < -a / 2 - tol::domain_slack || zp < -a / 2 - tol::domain_slack)
            throw DomainError("single_interface_retarded: point below the lower interface");
        return free_retarded(pt, z, zp) + reflection * d0 * std::exp(iu * wn.qz * (z + zp + a));
    }
    if (z > a / 2 + tol::domain_slack || zp > a / 2 + tol::domain_slack)
        throw DomainError("single_interface_retarded: point above the upper interface");
    return free_retarded(pt, z, zp) + reflection * d0 * std::exp(-iu * wn.qz * (z + zp - a));
}

Weyl advanced_from_retarded(const Weyl& retarded_at_swapped_args) {
    return retarded_at_swapped_args.adjoint();
}

NormalComponents normal_components_retarded(const CavityGreens& gf, double z, double zp) {
    const double q = gf.wn.q;
    const cplx qz2 = gf.wn.qz * gf.wn.qz;

    NormalComponents nc;
    if (q == 0.0)
        return nc;

    const Weyl ddz = gf.dz(z, zp);
    const Weyl ddzp = gf.dzp(z, zp);
    nc.z_s = iu * q / qz2 * ddz.ps;
    nc.z_p = iu * q / qz2 * ddz.pp;
    nc.s_z = -iu * q / qz2 * ddzp.sp;
    nc.p_z = -iu * q / qz2 * ddzp.pp;

    if (z == zp)
        throw DomainError("normal_components_retarded: zz component needs z != z'");
    nc.zz = q * q / (qz2 * qz2) * gf.dzdzp(z, zp).pp;
    return nc;
}

std::pair<Weyl, Weyl> boundary_residuals(const CavityConfig& cfg, const SpectralPoint& pt,
                                         double zp) {
    const auto gf = cavity_greens(cfg, pt);
    const Weyl y_lower = admittance(gf.r_lower);
    const Weyl y_upper = admittance(gf.r_upper);
    const cplx inv_iqz = iu / gf.wn.qz;

    const double a = cfg.gap;
    const Weyl lower = inv_iqz * gf.dz(-a / 2, zp) - y_lower * gf.value(-a / 2, zp);
    const Weyl upper = inv_iqz * gf.dz(+a / 2, zp) + y_upper * gf.value(+a / 2, zp);
    return {lower, upper};
}

Weyl gamma_surface(const Weyl& admittance_y, const SpectralPoint& pt) {
    const Weyl m = delta0_inverse(pt) * admittance_y;
    const Weyl gamma = -0.5 * (m - m.adjoint());
    // A lossless boundary outside its source cone has Gamma = 0 exactly;
    // what survives the antisymmetrization there is roundoff of m, and it
    // would otherwise masquerade as a tiny source.
    if (norm(gamma) <= 1e-13 * norm(m))
        return Weyl::zero();
    return gamma;
}

Weyl interface_gamma(const InterfaceSpec& spec, const SpectralPoint& pt) {
    return gamma_surface(admittance(interface_reflection(spec, pt).r), pt);
}

double verify_surface_identity(const CavityConfig& cfg, const SpectralPoint& pt, double z,
                               double zp) {
    const auto gf = cavity_greens(cfg, pt);
    const double a = cfg.gap;

    const Weyl gamma_lower = interface_gamma(cfg.lower, pt);
    const Weyl gamma_upper = interface_gamma(cfg.upper, pt);

    Weyl lhs = Weyl::zero();
    lhs += gf.value(z, -a / 2) * gamma_lower * advanced_from_retarded(gf.value(zp, -a / 2));
    lhs += gf.value(z, +a / 2) * gamma_upper * advanced_from_retarded(gf.value(zp, +a / 2));

    const Weyl dr = gf.value(z, zp);
    const Weyl da = advanced_from_retarded(gf.value(zp, z));
    return norm(lhs - (dr - da));
}

}  // namespace cavkg
