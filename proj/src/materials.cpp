#include "cavkg/materials.hpp"

#include <cmath>

namespace cavkg {

cplx dielectric_permittivity(const Dielectric& mat, double omega) {
    // Im eps(omega) sgn(omega) >= 0 keeps the model passive.
    const double sgn = omega >= 0.0 ? 1.0 : -1.0;
    return {mat.n * mat.n, mat.delta * sgn};
}

cplx drude_permittivity(const DrudeImpedance& drude, double omega) {
    const cplx den = omega * (cplx(omega) + iu / drude.relaxation_time);
    return 1.0 - drude.plasma_frequency * drude.plasma_frequency / den;
}

cplx drude_impedance(const DrudeImpedance& drude, double omega) {
    return 1.0 / std::sqrt(drude_permittivity(drude, omega));
}

cplx medium_wave_number(cplx eps, const SpectralPoint& pt) {
    const double q = pt.q();
    const cplx radicand = eps * pt.omega * pt.omega - q * q;
    cplx r = std::sqrt(radicand);
    if (r.imag() < 0.0)
        r = -r;
    else if (r.imag() == 0.0 && pt.omega < 0.0)
        r = -r;  // real radicand follows the vacuum sign convention
    return r;
}

namespace {

void check_denominator(cplx den, double scale, const char* where) {
    if (std::abs(den) < tol::denominator_floor * scale)
        throw DegenerateDenominatorError(std::string(where) + ": denominator collapsed");
}

}  // namespace

ReflectionMatrix dielectric_reflection(const Dielectric& mat, const SpectralPoint& pt) {
    const auto wn = wave_numbers(pt);
    const cplx eps = dielectric_permittivity(mat, pt.omega);
    const cplx qze = medium_wave_number(eps, pt);

    const double scale = std::abs(wn.qz) + std::abs(qze);
    check_denominator(wn.qz + qze, scale, "dielectric_reflection[s]");
    const cplx rs = (wn.qz - qze) / (wn.qz + qze);

    const double scale_p = std::abs(qze) + std::abs(eps * wn.qz);
    check_denominator(qze + eps * wn.qz, scale_p, "dielectric_reflection[p]");
    const cplx rp = (qze - eps * wn.qz) / (qze + eps * wn.qz);

    return {Weyl::diagonal(rs, rp), pt};
}

ReflectionMatrix metal_reflection(const Metal& mat, const SpectralPoint& pt) {
    const auto wn = wave_numbers(pt);
    const cplx zeta = drude_impedance(mat.impedance, pt.omega);

    const double scale_s = std::abs(wn.qz * zeta) + std::abs(pt.omega);
    check_denominator(wn.qz * zeta + pt.omega, scale_s, "metal_reflection[s]");
    const cplx rs = (wn.qz * zeta - pt.omega) / (wn.qz * zeta + pt.omega);

    const double scale_p = std::abs(pt.omega * zeta) + std::abs(wn.qz);
    check_denominator(pt.omega * zeta + wn.qz, scale_p, "metal_reflection[p]");
    const cplx rp = (pt.omega * zeta - wn.qz) / (pt.omega * zeta + wn.qz);

    return {Weyl::diagonal(rs, rp), pt};
}

ReflectionMatrix rest_reflection(const Material& mat, const SpectralPoint& pt) {
    return std::visit(
        [&](const auto& m) -> ReflectionMatrix {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Dielectric>)
                return dielectric_reflection(m, pt);
            else if constexpr (std::is_same_v<T, Metal>)
                return metal_reflection(m, pt);
            else
                return {Weyl::diagonal(-1.0, -1.0), pt};
        },
        mat);
}

double lorentz_gamma(double v) {
    if (std::abs(v) >= 1.0)
        throw DomainError("lorentz_gamma: |v| must be < 1");
    return 1.0 / std::sqrt(1.0 - v * v);
}

SpectralPoint lorentz_spectral(const SpectralPoint& pt, double v) {
    const double gamma = lorentz_gamma(v);
    return {gamma * (pt.omega - v * pt.qx), gamma * (pt.qx - v * pt.omega), pt.qy};
}

Weyl boost_mixing_matrix(const SpectralPoint& pt, double v) {
    const double gamma = lorentz_gamma(v);
    const auto boosted = lorentz_spectral(pt, v);
    const double q = pt.q();
    const double qp = boosted.q();
    if (q == 0.0 || qp == 0.0)
        throw DegeneratePointError("boost_mixing_matrix: q or q' vanishes");
    if (boosted.omega == 0.0)
        throw DegeneratePointError("boost_mixing_matrix: boosted frequency vanishes");

    const auto wn = wave_numbers(pt);
    const double eta = q * q - v * pt.omega * pt.qx;
    const cplx pref = gamma / (q * qp * boosted.omega);
    return {pref * eta * boosted.omega, -pref * v * pt.qy * wn.qz * wn.qz,
            pref * v * pt.qy * pt.omega * boosted.omega, pref * eta * pt.omega};
}

ReflectionMatrix boosted_reflection(const ReflectionMatrix& rest_r, const SpectralPoint& pt,
                                    double v) {
    if (v == 0.0)
        return {rest_r.r, pt};

    const cplx rs = rest_r.r.ss;
    const cplx rp = rest_r.r.pp;

    if (pt.qy == 0.0)
        return {Weyl::diagonal(rs, rp), pt};  // no polarization mixing in-plane

    const double gamma = lorentz_gamma(v);
    const auto boosted = lorentz_spectral(pt, v);
    const double q = pt.q();
    const double qp = boosted.q();
    if (q == 0.0 || qp == 0.0)
        throw DegeneratePointError("boosted_reflection: q or q' vanishes");

    const auto wn = wave_numbers(pt);
    // sin(theta) = v gamma qy qz / (q q'); cos(theta) = gamma eta / (q q')
    // with eta = q^2 - v omega qx keeps the transformation consistent with
    // the mixing-matrix congruence on every branch.
    const double eta = q * q - v * pt.omega * pt.qx;
    const cplx sin_t = v * gamma * pt.qy * wn.qz / (q * qp);
    const cplx cos_t = gamma * eta / (q * qp);

    Weyl r;
    r.ss = rs * cos_t * cos_t + rp * sin_t * sin_t;
    r.pp = rp * cos_t * cos_t + rs * sin_t * sin_t;
    r.sp = (pt.omega / wn.qz) * (rs - rp) * sin_t * cos_t;
    r.ps = (wn.qz * wn.qz / (pt.omega * pt.omega)) * r.sp;
    return {r, pt};
}

ReflectionMatrix reflection_matrix(const Material& mat, const SpectralPoint& pt, double v) {
    if (v == 0.0)
        return rest_reflection(mat, pt);
    return boosted_reflection(rest_reflection(mat, lorentz_spectral(pt, v)), pt, v);
}

Weyl admittance(const Weyl& reflection) {
    const Weyl upper = Weyl::identity() + reflection;
    if (std::abs(upper.det()) < 1e-14 * (1.0 + max_abs(reflection)))
        throw SingularAdmittanceError("admittance: I + R not invertible");
    return upper.inverse() * (Weyl::identity() - reflection);
}

double calibrate_drude_plasma_frequency(double relaxation_time, double decay_length,
                                        double omega_ref) {
    if (relaxation_time <= 0.0 || decay_length <= 0.0 || omega_ref <= 0.0)
        throw DomainError("calibrate_drude_plasma_frequency: arguments must be positive");

    const double target = 1.0 / decay_length;
    const auto decay_rate = [&](double wp) {
        const DrudeImpedance drude{wp, relaxation_time};
        const SpectralPoint pt{omega_ref, 0.0, 0.0};
        return medium_wave_number(drude_permittivity(drude, omega_ref), pt).imag();
    };

    double lo = 0.0, hi = omega_ref;
    while (decay_rate(hi) < target) {
        hi *= 2.0;
        if (hi > 1e12)
            throw ToleranceError("calibrate_drude_plasma_frequency: bracket not found");
    }
    while ((hi - lo) > 1e-10 * hi) {
        const double mid = 0.5 * (lo + hi);
        (decay_rate(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace cavkg
