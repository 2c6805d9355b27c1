#include "cavkg/quadrature.hpp"

#include <cmath>

#include "doctest.h"

using namespace cavkg;

TEST_CASE("adaptive panels integrate smooth functions") {
    const auto quad = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(quad.value == doctest::Approx(2.0).epsilon(1e-12));

    QuadOptions opts;
    opts.rel_tol = 1e-12;
    const auto g = integrate_adaptive([](double x) { return std::exp(-x * x); }, -6.0, 6.0, opts);
    CHECK(g.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("refinement convergence bounds the reported error") {
    const auto f = [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.321) + 1e-6); };
    QuadOptions coarse;
    coarse.rel_tol = 1e-4;
    QuadOptions fine;
    fine.rel_tol = 1e-9;
    const auto c = integrate_adaptive(f, 0.0, 1.0, coarse);
    const auto r = integrate_adaptive(f, 0.0, 1.0, fine);
    CHECK(std::abs(c.value - r.value) <= std::max(c.error * 10.0, 1e-4 * std::abs(r.value)));
    CHECK(r.evaluations > c.evaluations);
}

TEST_CASE("stalled refinement raises a tolerance failure") {
    // step discontinuity: the panel estimate cannot reach 1e-15 at depth 3
    QuadOptions strict;
    strict.rel_tol = 1e-15;
    strict.max_depth = 3;
    const auto step = [](double x) { return x < 1.0 / 3.0 ? 0.0 : 1.0; };
    CHECK_THROWS_AS(integrate_adaptive(step, 0.0, 1.0, strict), ToleranceError);
}

TEST_CASE("light-cone substitution removes the 1/qz singularity") {
    // f = q/qz on (0, omega): the substituted integrand is 1, integral omega
    for (const double omega : {0.5, 1.0, 3.0}) {
        const auto f = [omega](double q) {
            if (q >= omega)
                return 0.0;
            return q / std::sqrt(omega * omega - q * q);
        };
        const auto quad = integrate_q(f, omega, 1e-6, 1e-10);
        CHECK(quad.value == doctest::Approx(omega).epsilon(1e-10));
    }
}

TEST_CASE("evanescent truncation tail") {
    // integrand with an e^{-2 q a} envelope: doubling kappa_max changes the
    // result by less than the requested tolerance
    const double omega = 1.0, a = 0.4;
    const auto f = [&](double q) {
        if (q <= omega)
            return 0.0;
        const double kappa = std::sqrt(q * q - omega * omega);
        return std::exp(-2.0 * kappa * a);
    };
    const double kappa_max = default_kappa_max(a, omega);
    const auto base = integrate_q(f, omega, kappa_max, 1e-9);
    const auto doubled = integrate_q(f, omega, 2.0 * kappa_max, 1e-9);
    CHECK(std::abs(doubled.value - base.value) < 1e-9 * std::abs(base.value) + 1e-15);
}

TEST_CASE("default kappa_max keeps the tail below 1e-17") {
    for (const double a : {0.2, 0.4, 1.1, 3.0})
        CHECK(std::exp(-2.0 * default_kappa_max(a, 1.0) * a) < 1e-17);
}
