// Adaptive Gauss-Kronrod integration over q with light-cone handling.
#pragma once

#include <functional>

#include "cavkg/errors.hpp"

namespace cavkg {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
};

struct QuadOptions {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_depth = 30;
};

// Adaptive 7-15 Gauss-Kronrod bisection on [a, b]; endpoints are never
// evaluated.  Deterministic: fixed node set and left-to-right summation.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadOptions& opts = {});

// Integral of f over q in (0, sqrt(omega^2 + kappa_max^2)), split at the
// light cone.  The propagating sector is parameterized by v = qz in
// (0, omega) using q dq = -v dv, which removes the 1/qz singularity; the
// evanescent sector by kappa in (0, kappa_max).
QuadResult integrate_q(const std::function<double(double)>& f, double omega, double kappa_max,
                       double tol);

// kappa_max = max(20/gap, 10 omega): e^{-2 kappa a} tail below ~1e-17.
double default_kappa_max(double gap, double omega);

}  // namespace cavkg
