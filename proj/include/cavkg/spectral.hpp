// Spectral coordinates, branch-correct wave numbers, and the free-space
// retarded/advanced Green functions in the Weyl basis.
#pragma once

#include "cavkg/errors.hpp"
#include "cavkg/weyl.hpp"

namespace cavkg {

// Evaluation coordinate (omega, qx, qy) in natural units (c = hbar = kB = 1).
struct SpectralPoint {
    double omega = 0.0;
    double qx = 0.0;
    double qy = 0.0;

    double q() const { return std::hypot(qx, qy); }
    SpectralPoint negated() const { return {-omega, -qx, -qy}; }
};

enum class Sector { propagating, evanescent };

struct WaveNumbers {
    double q = 0.0;
    cplx qz{};
    Sector sector = Sector::propagating;
};

// Normal wave number over the entire frequency axis:
//   omega^2 > q^2 : qz = sgn(omega) sqrt(omega^2 - q^2)   (outgoing wave)
//   q^2 > omega^2 : qz = i sqrt(q^2 - omega^2)            (evanescent decay)
// Rejects omega = 0 and points inside the light-cone exclusion band.
WaveNumbers wave_numbers(const SpectralPoint& pt);

// Metric matrix g = diag(1, qz^2/omega^2).
Weyl g_matrix(const SpectralPoint& pt);
Weyl g_inverse(const SpectralPoint& pt);

// Amplitude of the free-space GF: Delta_0 = (2 pi / (i qz)) g.
Weyl delta0(const SpectralPoint& pt);
Weyl delta0_inverse(const SpectralPoint& pt);

// Free-space retarded GF Delta_0 e^{i qz |z - z'|}; advanced is its conjugate.
Weyl free_retarded(const SpectralPoint& pt, double z, double zp);
Weyl free_advanced(const SpectralPoint& pt, double z, double zp);

}  // namespace cavkg
