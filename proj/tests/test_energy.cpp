#include "cavkg/energy.hpp"

#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace cavkg;
using cavkg::testing::random_point;

TEST_CASE("weight table matches row by row") {
    // propagating point: qz = v real
    {
        const SpectralPoint pt{2.0, 1.2, 0.0};
        const auto wn = wave_numbers(pt);
        const double w2 = 4.0, q2 = 1.44, v2 = std::norm(wn.qz);
        for (int nu : {-1, +1})
            for (int nup : {-1, +1}) {
                const double prod = nu * nup;
                CHECK(energy_weight(nu, nup, Polarization::s, wn, pt.omega) ==
                      doctest::Approx(w2 * (1 + prod) + q2 * (1 - prod)).epsilon(1e-15));
                CHECK(energy_weight(nu, nup, Polarization::p, wn, pt.omega) ==
                      doctest::Approx(w2 / v2 * (w2 * (1 + prod) + q2 * (prod - 1)))
                          .epsilon(1e-15));
            }
    }
    // evanescent point: qz = i kappa
    {
        const SpectralPoint pt{1.0, 1.5, 0.0};
        const auto wn = wave_numbers(pt);
        const double w2 = 1.0, q2 = 2.25, k2 = std::norm(wn.qz);
        for (int nu : {-1, +1})
            for (int nup : {-1, +1}) {
                const double prod = nu * nup;
                CHECK(energy_weight(nu, nup, Polarization::s, wn, pt.omega) ==
                      doctest::Approx(w2 * (1 - prod) + q2 * (1 + prod)).epsilon(1e-15));
                CHECK(energy_weight(nu, nup, Polarization::p, wn, pt.omega) ==
                      doctest::Approx(w2 / k2 * (w2 * (prod - 1) + q2 * (prod + 1)))
                          .epsilon(1e-15));
            }
    }
}

TEST_CASE("free-space energy density") {
    CavityConfig vac{0.8, {Dielectric{1.0}, 0.0, 0.0}, {Dielectric{1.0}, 0.0, 0.0}};

    // reference density per signed frequency: u0 = w^2/qz coth(w/2T); the
    // folded (positive-frequency) output is twice that
    const SpectralPoint pt{2.0, 0.0, 0.0};
    CHECK(free_space_energy_density(pt, 0.0) == doctest::Approx(2.0 * 2.0).epsilon(1e-14));
    CHECK(energy_density(vac, pt, 0.1) == doctest::Approx(4.0).epsilon(1e-12));

    std::mt19937_64 rng(81);
    for (int i = 0; i < 80; ++i) {
        auto p = random_point(rng);
        p.omega = std::abs(p.omega);
        const double T = 0.6;
        CavityConfig vac_t{0.8, {Dielectric{1.0}, T, 0.0}, {Dielectric{1.0}, T, 0.0}};
        const double expect = free_space_energy_density(p, T);
        const double got = energy_density(vac_t, p, -0.13);
        CHECK(got == doctest::Approx(expect).epsilon(1e-11));
    }

    // evanescent: no free-space spectral weight
    CHECK(energy_density(vac, {1.0, 1.4, 0.0}, 0.0) == 0.0);
}

TEST_CASE("tabulated assembly agrees with the tensor-component route") {
    std::mt19937_64 rng(82);
    const CavityConfig cfgs[] = {cavkg::testing::two_dielectrics(),
                                 cavkg::testing::dielectric_metal(),
                                 cavkg::testing::sliding_dielectric()};
    std::uniform_real_distribution<double> u(-0.49, 0.49);
    for (int i = 0; i < 150; ++i) {
        const auto& cfg = cfgs[i % 3];
        auto pt = random_point(rng);
        pt.omega = std::abs(pt.omega);
        const double z = u(rng) * cfg.gap;
        try {
            const auto amps = kg_amplitudes(cfg, pt);
            const double u1 = energy_density(amps, pt, z);
            const double u2 = energy_density_from_components(amps, pt, z);
            CHECK(std::abs(u1 - u2) < 1e-10 * (1.0 + std::abs(u1)));

            // zz piece consistency with the normal components when q > 0
            const auto nc = kg_normal_components(amps, z, z);
            const cplx qz2 = amps.wn.qz * amps.wn.qz;
            const cplx direct = amps.wn.q * amps.wn.q / (qz2 * qz2) * amps.dzdzp(z, z).pp;
            CHECK(std::abs(nc.zz - direct) < 1e-12 * (1.0 + std::abs(direct)));
        } catch (const CavityResonanceError&) {
        }
    }
}

TEST_CASE("energy per area") {
    SUBCASE("free space: constant integrand gives a * u0") {
        const double T = 0.7, a = 0.9;
        CavityConfig vac{a, {Dielectric{1.0}, T, 0.0}, {Dielectric{1.0}, T, 0.0}};
        const SpectralPoint pt{1.3, 0.5, 0.2};
        const auto point = energy_per_area(vac, pt);
        CHECK(point.U ==
              doctest::Approx(a * free_space_energy_density(pt, T)).epsilon(1e-12));
        CHECK_FALSE(point.resonance_skipped);
    }

    SUBCASE("analytic z-integral matches 2000-panel composite quadrature") {
        std::mt19937_64 rng(83);
        const CavityConfig cfgs[] = {cavkg::testing::two_dielectrics(),
                                     cavkg::testing::sliding_dielectric()};
        for (int i = 0; i < 30; ++i) {
            const auto& cfg = cfgs[i % 2];
            auto pt = random_point(rng);
            pt.omega = std::abs(pt.omega);
            try {
                const auto amps = kg_amplitudes(cfg, pt);
                const auto point = energy_per_area(cfg, pt);

                const int n = 2000;  // Simpson panels over the gap
                const double h = cfg.gap / n;
                double simpson = 0.0;
                for (int k = 0; k <= n; ++k) {
                    const double z = -cfg.gap / 2 + k * h;
                    const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
                    simpson += w * energy_density(amps, pt, z);
                }
                simpson *= h / 3.0;
                const double scale = std::max({1e-30, std::abs(simpson), std::abs(point.U)});
                CHECK(std::abs(point.U - simpson) < 1e-8 * scale);
            } catch (const CavityResonanceError&) {
            }
        }
    }

    SUBCASE("sliding-cavity golden value at normal incidence") {
        // n = 1.3 plates, T = 0, a = 0.4/omega, v = 0.5; frozen once from
        // this implementation as a regression anchor.  Close to the free
        // value a * 2 omega^2/qz = 0.8, shifted by the weak reflections.
        const auto cfg = cavkg::testing::sliding_dielectric(0.5);
        const auto point = energy_per_area(cfg, {1.0, 0.0, 0.0});
        CHECK(point.U == doctest::Approx(0.81892495834079).epsilon(1e-10));
        CHECK_FALSE(point.resonance_skipped);
    }
}

TEST_CASE("planck spectrum") {
    CHECK(planck_closed_form(0.0, 2.0) == doctest::Approx(8.0 / (4.0 * M_PI * M_PI)));
    const double w = 1.3;
    CHECK(planck_closed_form(w, w) ==
          doctest::Approx(w * w * w / (2.0 * M_PI * M_PI) * (1.0 / std::expm1(1.0) + 0.5)));

    for (const auto& [T, w2] : {std::pair{0.0, 1.0}, {0.5, 0.8}, {1.0, 2.2}, {2.0, 0.3}}) {
        const double numeric = planck_spectrum(T, w2, 0.9, 1e-9);
        CHECK(numeric == doctest::Approx(planck_closed_form(T, w2)).epsilon(1e-6));
    }
}

TEST_CASE("symmetric cavity cross-check path") {
    const Dielectric n13{1.3, 0.0};
    const double a = 0.4;

    SUBCASE("no interface, no renormalized energy") {
        CHECK(sopova_ford_integrand(Dielectric{1.0, 0.0}, a, {1.0, 0.5, 0.0}, 0.1) == 0.0);
    }

    SUBCASE("z -> -z symmetry") {
        std::mt19937_64 rng(84);
        for (int i = 0; i < 50; ++i) {
            auto pt = random_point(rng);
            pt.omega = std::abs(pt.omega);
            const double z = 0.15;
            CHECK(sopova_ford_integrand(n13, a, pt, z) ==
                  doctest::Approx(sopova_ford_integrand(n13, a, pt, -z)).epsilon(1e-13));
        }
    }

    SUBCASE("pointwise agreement with the KG route in both sectors") {
        CavityConfig cfg{a, {n13, 0.0, 0.0}, {n13, 0.0, 0.0}};
        std::mt19937_64 rng(85);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        int done = 0;
        for (int i = 0; i < 400 && done < 200; ++i) {
            const double omega = 0.3 + 2.5 * u(rng);
            const double q = (i % 2) ? omega * (0.05 + 0.9 * u(rng))   // propagating
                                     : omega * (1.02 + 0.27 * u(rng));  // inside polariton window
            const SpectralPoint pt{omega, q, 0.0};
            const double z = (u(rng) - 0.5) * a * 0.9;
            try {
                const double via_kg =
                    energy_density(cfg, pt, z, EnergyOptions{true, 0.0});
                const double via_sf = sopova_ford_integrand(n13, a, pt, z);
                CHECK(std::abs(via_kg - via_sf) <
                      1e-8 * std::max(1.0, std::max(std::abs(via_kg), std::abs(via_sf))));
                ++done;
            } catch (const CavityResonanceError&) {
            }
        }
        CHECK(done == 200);
    }
}

TEST_CASE("polariton cone") {
    SUBCASE("rest: circle of radius n omega") {
        const auto cone = polariton_cone(1.3, 0.0, 2.0);
        CHECK(cone.kind == ConicKind::circle);
        CHECK(cone.qx1 == doctest::Approx(2.6));
        CHECK(cone.qx2 == doctest::Approx(-2.6));
        CHECK(cone.contains(2.59, 0.0));
        CHECK_FALSE(cone.contains(2.61, 0.0));
        CHECK(cone.contains(0.0, 2.59));
        CHECK_FALSE(cone.contains(1.9, 1.9));
    }

    SUBCASE("sub-Cherenkov ellipse and super-Cherenkov hyperbola") {
        CHECK(polariton_cone(1.3, 0.5, 1.0).kind == ConicKind::ellipse);
        CHECK(polariton_cone(1.3, 0.9, 1.0).kind == ConicKind::hyperbola);
        CHECK_THROWS_AS(polariton_cone(1.3, 1.0 / 1.3, 1.0), DegenerateConicError);
    }

    SUBCASE("axis intersections are roots of the boosted medium wave number") {
        for (const double v : {0.3, 0.5, 0.83, 0.9}) {
            const double n = 1.3, omega = 1.7;
            const auto cone = polariton_cone(n, v, omega);
            for (const double qx : {cone.qx1, cone.qx2}) {
                const auto boosted = lorentz_spectral({omega, qx, 0.0}, v);
                const cplx radicand =
                    n * n * boosted.omega * boosted.omega - boosted.q() * boosted.q();
                CHECK(std::abs(radicand) < 1e-10 * omega * omega);
            }
        }
    }

    SUBCASE("far hyperbola vertex near 5.9 omega at v = 0.83") {
        const auto cone = polariton_cone(1.3, 0.83, 1.0);
        CHECK(cone.qx2 == doctest::Approx(5.9).epsilon(0.02));
    }

    SUBCASE("boundary points satisfy q_ze' = 0") {
        const auto cone = polariton_cone(1.3, 0.5, 1.0);
        // solve the conic for qy^2 at a given qx strictly inside (qx1 range)
        for (const double qx : {0.0, 0.4, -0.3, 0.9}) {
            const double qy2 = (cone.rhs - cone.cxx * qx * qx - cone.cx * qx) / cone.cyy;
            REQUIRE(qy2 > 0.0);
            const double qy = std::sqrt(qy2);
            const auto boosted = lorentz_spectral({1.0, qx, qy}, 0.5);
            const double radicand =
                1.69 * boosted.omega * boosted.omega - boosted.q() * boosted.q();
            CHECK(std::abs(radicand) < 1e-10);
        }
    }
}

TEST_CASE("z -> -z symmetry for a symmetric cavity at rest") {
    CavityConfig cfg{0.6, {Dielectric{1.4, 0.01}, 0.5, 0.0}, {Dielectric{1.4, 0.01}, 0.5, 0.0}};
    std::mt19937_64 rng(87);
    for (int i = 0; i < 60; ++i) {
        auto pt = random_point(rng);
        pt.omega = std::abs(pt.omega);
        const double z = 0.21;
        try {
            const auto amps = kg_amplitudes(cfg, pt);
            const double up = energy_density(amps, pt, z);
            const double down = energy_density(amps, pt, -z);
            CHECK(std::abs(up - down) < 1e-11 * (1.0 + std::abs(up)));
        } catch (const CavityResonanceError&) {
        }
    }
}

TEST_CASE("energy density is nonnegative without vacuum subtraction") {
    std::mt19937_64 rng(86);
    const CavityConfig cfgs[] = {cavkg::testing::two_dielectrics(),
                                 cavkg::testing::dielectric_metal(),
                                 cavkg::testing::sliding_dielectric()};
    std::uniform_real_distribution<double> u(-0.49, 0.49);
    for (int i = 0; i < 200; ++i) {
        const auto& cfg = cfgs[i % 3];
        auto pt = random_point(rng);
        pt.omega = std::abs(pt.omega);
        try {
            CHECK(energy_density(cfg, pt, u(rng) * cfg.gap) > -1e-10);
        } catch (const CavityResonanceError&) {
        }
    }
}

TEST_CASE("cavity-mode peaks of a highly reflecting cavity") {
    // Near-mirror metal plates at T = 0: the renormalized propagating
    // spectrum peaks where qz a = m pi.
    const double a = 1.1;
    const Metal mirror_like{DrudeImpedance{5e4, 1.1}};
    CavityConfig cfg{a, {mirror_like, 0.0, 0.0}, {mirror_like, 0.0, 0.0}};

    const double omega = 4.0;
    const double q_m = std::sqrt(omega * omega - std::pow(M_PI / a, 2));  // m = 1 line

    double best_q = -1.0, best_u = -1e300;
    for (double q = q_m - 0.2; q <= q_m + 0.2; q += 0.002) {
        const auto point = energy_per_area(cfg, {omega, q, 0.0}, EnergyOptions{true, 0.0});
        if (!point.resonance_skipped && point.U > best_u) {
            best_u = point.U;
            best_q = q;
        }
    }
    CHECK(std::abs(best_q - q_m) < 0.02);
    CHECK(best_u > 0.0);
}
