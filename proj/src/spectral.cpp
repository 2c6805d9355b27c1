#include "cavkg/spectral.hpp"

#include <cmath>

namespace cavkg {

WaveNumbers wave_numbers(const SpectralPoint& pt) {
    if (pt.omega == 0.0)
        throw DomainError("wave_numbers: omega = 0 excluded from evaluation");
    const double q = pt.q();
    const double disc = pt.omega * pt.omega - q * q;
    if (std::abs(disc) <= tol::light_cone_band)
        throw LightConeError("wave_numbers: point inside light-cone exclusion band");

    WaveNumbers wn;
    wn.q = q;
    if (disc > 0.0) {
        wn.sector = Sector::propagating;
        wn.qz = cplx(std::copysign(std::sqrt(disc), pt.omega), 0.0);
    } else {
        wn.sector = Sector::evanescent;
        wn.qz = cplx(0.0, std::sqrt(-disc));
    }
    return wn;
}

Weyl g_matrix(const SpectralPoint& pt) {
    const auto wn = wave_numbers(pt);
    return Weyl::diagonal(1.0, wn.qz * wn.qz / (pt.omega * pt.omega));
}

Weyl g_inverse(const SpectralPoint& pt) {
    const auto wn = wave_numbers(pt);
    return Weyl::diagonal(1.0, pt.omega * pt.omega / (wn.qz * wn.qz));
}

Weyl delta0(const SpectralPoint& pt) {
    const auto wn = wave_numbers(pt);
    const cplx pref = 2.0 * M_PI / (iu * wn.qz);
    return Weyl::diagonal(pref, pref * wn.qz * wn.qz / (pt.omega * pt.omega));
}

Weyl delta0_inverse(const SpectralPoint& pt) {
    const auto wn = wave_numbers(pt);
    const cplx pref = iu * wn.qz / (2.0 * M_PI);
    return Weyl::diagonal(pref, pref * pt.omega * pt.omega / (wn.qz * wn.qz));
}

Weyl free_retarded(const SpectralPoint& pt, double z, double zp) {
    const auto wn = wave_numbers(pt);
    return delta0(pt) * std::exp(iu * wn.qz * std::abs(z - zp));
}

Weyl free_advanced(const SpectralPoint& pt, double z, double zp) {
    return free_retarded(pt, z, zp).conjugate();
}

}  // namespace cavkg
