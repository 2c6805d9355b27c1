#include "cavkg/energy.hpp"

#include <cmath>

namespace cavkg {

double energy_weight(int nu, int nup, Polarization pol, const WaveNumbers& wn, double omega) {
    const double w2 = omega * omega;
    const double q2 = wn.q * wn.q;
    const double prod = double(nu * nup);
    if (wn.sector == Sector::propagating) {
        const double v = std::abs(wn.qz.real());
        if (pol == Polarization::s)
            return w2 * (1.0 + prod) + q2 * (1.0 - prod);
        return (w2 / (v * v)) * (w2 * (1.0 + prod) + q2 * (prod - 1.0));
    }
    const double kappa = wn.qz.imag();
    if (pol == Polarization::s)
        return w2 * (1.0 - prod) + q2 * (1.0 + prod);
    return (w2 / (kappa * kappa)) * (w2 * (prod - 1.0) + q2 * (prod + 1.0));
}

namespace {

struct AmpTerm {
    int nu, nup;
    const Weyl* d;
};

// Shared assembly: sums weight * D^{nu nu'}_{sigma sigma} * f(nu, nu') and
// folds to omega > 0, checking the imaginary residue.
template <typename PhaseFn>
double assemble_energy(const KgAmplitudes& amps, const SpectralPoint& pt, PhaseFn&& phase) {
    const AmpTerm terms[4] = {
        {-1, -1, &amps.mm}, {-1, +1, &amps.mp}, {+1, -1, &amps.pm}, {+1, +1, &amps.pp}};

    cplx sum = 0.0;
    double scale = 0.0;
    for (const auto& t : terms) {
        const double ws = energy_weight(t.nu, t.nup, Polarization::s, amps.wn, pt.omega);
        const double wp = energy_weight(t.nu, t.nup, Polarization::p, amps.wn, pt.omega);
        const cplx ph = phase(t.nu, t.nup);
        const cplx term = (ws * t.d->ss + wp * t.d->pp) * ph;
        sum += term;
        scale += (std::abs(ws * t.d->ss) + std::abs(wp * t.d->pp)) * std::abs(ph);
    }

    const cplx u = iu / (16.0 * M_PI) * sum;
    const double residue_scale = scale / (16.0 * M_PI);
    if (std::abs(u.imag()) > 1e-12 * residue_scale + 1e-280)
        throw Error("energy assembly: imaginary residue above tolerance");
    return 2.0 * u.real();
}

KgAmplitudes amplitudes_for(const CavityConfig& cfg, const SpectralPoint& pt,
                            const EnergyOptions& opts) {
    return opts.subtract_vacuum
               ? renormalized_kg_amplitudes(cfg, pt, opts.environment_temperature)
               : kg_amplitudes(cfg, pt);
}

}  // namespace

double energy_density(const KgAmplitudes& amps, const SpectralPoint& pt, double z) {
    const cplx qz = amps.wn.qz;
    return assemble_energy(amps, pt, [&](int nu, int nup) {
        return std::exp(iu * (double(nu) * qz - double(nup) * std::conj(qz)) * z);
    });
}

double energy_density(const CavityConfig& cfg, const SpectralPoint& pt, double z,
                      const EnergyOptions& opts) {
    return energy_density(amplitudes_for(cfg, pt, opts), pt, z);
}

double energy_density_from_components(const KgAmplitudes& amps, const SpectralPoint& pt,
                                      double z) {
    const double w2 = pt.omega * pt.omega;
    const double q2 = amps.wn.q * amps.wn.q;
    const cplx qz2 = amps.wn.qz * amps.wn.qz;

    const Weyl val = amps.value(z, z);
    const Weyl der = amps.dzdzp(z, z);
    const cplx sum =
        (w2 + q2) * val.ss + der.ss + w2 * val.pp + w2 * (w2 + q2) / (qz2 * qz2) * der.pp;

    const cplx u = iu / (16.0 * M_PI) * sum;
    return 2.0 * u.real();
}

EnergySpectrumPoint energy_per_area(const CavityConfig& cfg, const SpectralPoint& pt,
                                    const EnergyOptions& opts) {
    EnergySpectrumPoint out;
    out.pt = pt;
    out.vacuum_subtracted = opts.subtract_vacuum;

    KgAmplitudes amps;
    try {
        amps = amplitudes_for(cfg, pt, opts);
    } catch (const CavityResonanceError&) {
        out.resonance_skipped = true;
        return out;
    }

    const cplx qz = amps.wn.qz;
    const double a = cfg.gap;
    out.U = assemble_energy(amps, pt, [&](int nu, int nup) -> cplx {
        const cplx eps = iu * (double(nu) * qz - double(nup) * std::conj(qz));
        if (std::abs(eps) * a < tol::z_integral_floor)
            return a;
        return (std::exp(eps * a / 2.0) - std::exp(-eps * a / 2.0)) / eps;
    });
    return out;
}

double free_space_energy_density(const SpectralPoint& pt, double temperature) {
    const auto wn = wave_numbers(pt);
    if (wn.sector == Sector::evanescent)
        return 0.0;
    return 2.0 * pt.omega * pt.omega / wn.qz.real() * thermal_factor(pt.omega, temperature);
}

double planck_closed_form(double temperature, double omega) {
    if (!(omega > 0.0))
        throw DomainError("planck_closed_form: omega must be positive");
    const double n =
        temperature > 0.0 ? 1.0 / std::expm1(omega / temperature) : 0.0;
    return omega * omega * omega / (2.0 * M_PI * M_PI) * (n + 0.5);
}

double planck_spectrum(double temperature, double omega, double gap, double tol) {
    CavityConfig free_space;
    free_space.gap = gap;
    free_space.lower = {Dielectric{1.0, 0.0}, temperature, 0.0};
    free_space.upper = {Dielectric{1.0, 0.0}, temperature, 0.0};

    const auto f = [&](double q) {
        return q * energy_per_area(free_space, {omega, q, 0.0}).U;
    };
    // d^2q/(2 pi)^3 at signed-frequency normalization; the folded U carries
    // twice the signed density, hence 8 pi^2 = 2 * (2 pi)^3 / (2 pi).
    const auto quad = integrate_q(f, omega, default_kappa_max(gap, omega), tol);
    return quad.value / (8.0 * M_PI * M_PI * gap);
}

double sopova_ford_integrand(const Dielectric& mat, double gap, const SpectralPoint& pt,
                             double z) {
    const auto wn = wave_numbers(pt);
    const Weyl r = dielectric_reflection(mat, pt).r;
    const double w2 = pt.omega * pt.omega;
    const double q2 = wn.q * wn.q;

    const cplx phase = std::exp(iu * wn.qz * gap);
    const cplx phase2 = phase * phase;

    double sum = 0.0;
    for (const cplx rr : {r.ss, -r.pp}) {
        const cplx num = w2 * rr * rr * phase2 + q2 * rr * phase * std::cos(2.0 * wn.qz * z);
        const cplx den = wn.qz * (1.0 - rr * rr * phase2);
        sum += 2.0 * (num / den).real();
    }
    return sum;
}

PolaritonCone polariton_cone(double n, double v, double omega) {
    if (!(n >= 1.0))
        throw DomainError("polariton_cone: refractive index must be >= 1");
    if (std::abs(v) >= 1.0)
        throw DomainError("polariton_cone: |v| must be < 1");
    const double nv = n * v;
    if (std::abs(std::abs(nv) - 1.0) < 1e-12)
        throw DegenerateConicError("polariton_cone: Cherenkov threshold n v = 1");

    PolaritonCone cone;
    cone.n = n;
    cone.v = v;
    cone.omega = omega;
    cone.kind = v == 0.0 ? ConicKind::circle
                         : (std::abs(nv) < 1.0 ? ConicKind::ellipse : ConicKind::hyperbola);
    cone.cxx = 1.0 - nv * nv;
    cone.cx = 2.0 * (n * n - 1.0) * v * omega;
    cone.cyy = 1.0 - v * v;
    cone.rhs = (n * n - v * v) * omega * omega;
    cone.qx1 = omega * (v + n) / (1.0 + nv);
    cone.qx2 = omega * (v - n) / (1.0 - nv);
    return cone;
}

}  // namespace cavkg
