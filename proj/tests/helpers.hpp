// Shared generators and reference configurations for the test suites.
#pragma once

#include <random>

#include "cavkg/greens.hpp"

namespace cavkg::testing {

inline SpectralPoint random_point(std::mt19937_64& rng, bool evanescent) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double omega = (u(rng) < 0.5 ? -1.0 : 1.0) * (0.2 + 2.8 * u(rng));
    const double q = evanescent ? std::abs(omega) * (1.05 + 2.0 * u(rng))
                                : std::abs(omega) * (0.05 + 0.9 * u(rng));
    const double phi = 2.0 * M_PI * u(rng);
    return {omega, q * std::cos(phi), q * std::sin(phi)};
}

inline SpectralPoint random_point(std::mt19937_64& rng) {
    return random_point(rng, (rng() & 1u) != 0);
}

// Two dielectrics at rest, unequal temperatures.
inline CavityConfig two_dielectrics() {
    return {1.0, {Dielectric{1.3, 0.0}, 0.4, 0.0}, {Dielectric{2.0, 0.05}, 1.0, 0.0}};
}

// Dielectric facing a Drude metal, both at rest.
inline CavityConfig dielectric_metal() {
    return {0.7, {Dielectric{1.3, 0.0}, 1.3, 0.0}, {Metal{DrudeImpedance{306.89, 1.1}}, 0.7, 0.0}};
}

// Symmetric dielectric cavity with the upper plate sliding.
inline CavityConfig sliding_dielectric(double v = 0.5) {
    return {0.4, {Dielectric{1.3, 0.0}, 0.0, 0.0}, {Dielectric{1.3, 0.0}, 0.0, v}};
}

}  // namespace cavkg::testing
