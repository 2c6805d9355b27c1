// Energy-density spectra, gap-integrated spectra U(omega, q), Planck
// reference, the independent symmetric-cavity cross-check path, and the
// polariton-cone geometry.
#pragma once

#include "cavkg/keldysh.hpp"
#include "cavkg/quadrature.hpp"

namespace cavkg {

enum class Polarization { s, p };

// Weighting factor of the (nu, nu') amplitude in the energy density,
// spelled out by polarization and sector (the accompanying z-exponential
// is e^{i (nu qz - nu' qz*) z}).
double energy_weight(int nu, int nup, Polarization pol, const WaveNumbers& wn, double omega);

struct EnergyOptions {
    bool subtract_vacuum = false;
    double environment_temperature = 0.0;
};

// Spectral energy density u(Omega; z), folded to omega > 0 (twice the real
// part of the complex assembly).  The imaginary residue of the assembly is
// checked against 1e-12 of the term magnitude and discarded.
double energy_density(const KgAmplitudes& amps, const SpectralPoint& pt, double z);
double energy_density(const CavityConfig& cfg, const SpectralPoint& pt, double z,
                      const EnergyOptions& opts = {});

// Independent route through the tensor form (normal components / analytic
// z-derivatives) instead of the tabulated weights.
double energy_density_from_components(const KgAmplitudes& amps, const SpectralPoint& pt,
                                      double z);

struct EnergySpectrumPoint {
    SpectralPoint pt;
    double U = 0.0;
    bool resonance_skipped = false;
    bool vacuum_subtracted = false;
};

// Gap-integrated spectrum U(omega, q) = int_{-a/2}^{a/2} u(Omega; z) dz,
// evaluated analytically per amplitude term.  Resonant points are returned
// flagged with U = 0 instead of throwing.
EnergySpectrumPoint energy_per_area(const CavityConfig& cfg, const SpectralPoint& pt,
                                    const EnergyOptions& opts = {});

// Folded free-space energy density 2 omega^2/qz coth(omega/2T) on the
// propagating branch.
double free_space_energy_density(const SpectralPoint& pt, double temperature);

// omega^3/(2 pi^2) (N(omega) + 1/2).
double planck_closed_form(double temperature, double omega);

// q-integrated free-space spectrum divided by the gap; matches the closed
// form.  The quadrature runs over d^2q/(2 pi)^3 at signed-frequency
// normalization (the folded U carries a factor 2).
double planck_spectrum(double temperature, double omega, double gap = 1.0, double tol = 1e-9);

// Renormalized energy density of a symmetric cavity at T = 0, evaluated
// from the reflection coefficients alone (no KG assembly); the pre-q-
// integration integrand of the real-frequency Sopova-Ford representation.
double sopova_ford_integrand(const Dielectric& mat, double gap, const SpectralPoint& pt,
                             double z);

enum class ConicKind { circle, ellipse, hyperbola };

// Border of the polariton cone of a dielectric sliding at velocity v, as
// seen from the lab frame: the locus q_ze' = 0.
struct PolaritonCone {
    ConicKind kind = ConicKind::circle;
    double n = 1.0, v = 0.0, omega = 0.0;
    double qx1 = 0.0, qx2 = 0.0;        // axis intersections omega (v +- n)/(1 +- n v)
    double cxx = 0.0, cx = 0.0, cyy = 0.0, rhs = 0.0;  // cxx qx^2 + cx qx + cyy qy^2 = rhs

    // Inside the source support (medium wave number real).
    bool contains(double qx, double qy) const {
        return rhs - cxx * qx * qx - cx * qx - cyy * qy * qy > 0.0;
    }
};

PolaritonCone polariton_cone(double n, double v, double omega);

}  // namespace cavkg
