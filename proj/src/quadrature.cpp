#include "cavkg/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace cavkg {

namespace {

// 7-15 Gauss-Kronrod nodes and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                            0.741531185599394, 0.586087235467691, 0.405845151377397,
                            0.207784955007898, 0.0};
constexpr double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                            0.140653259715525, 0.169004726639267, 0.190350578064785,
                            0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct PanelEstimate {
    double kronrod;
    double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b, long& evals) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1)
            resg += kWg[j / 2] * fsum;
    }
    evals += 15;
    return {resk * half, std::abs((resk - resg) * half)};
}

struct Worker {
    const std::function<double(double)>& f;
    const QuadOptions& opts;
    long evals = 0;
    double accumulated_error = 0.0;
    bool stalled = false;

    double integrate(double a, double b, double tol_panel, int depth) {
        const auto est = gk15(f, a, b, evals);
        if (est.error <= tol_panel || depth >= opts.max_depth) {
            accumulated_error += est.error;
            if (est.error > tol_panel)
                stalled = true;
            return est.kronrod;
        }
        const double mid = 0.5 * (a + b);
        return integrate(a, mid, 0.5 * tol_panel, depth + 1) +
               integrate(mid, b, 0.5 * tol_panel, depth + 1);
    }
};

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadOptions& opts) {
    if (!(b > a))
        return {};

    Worker worker{f, opts};
    const auto coarse = gk15(f, a, b, worker.evals);
    const double tol_total =
        std::max(opts.abs_tol, opts.rel_tol * std::max(std::abs(coarse.kronrod), 1e-300));
    const double value = worker.integrate(a, b, 0.1 * tol_total, 0);

    const double requested = std::max(opts.abs_tol, opts.rel_tol * std::max(std::abs(value), 1e-300));
    if (worker.stalled && worker.accumulated_error > requested)
        throw ToleranceError("integrate_adaptive: refinement stalled above tolerance");
    return {value, worker.accumulated_error, worker.evals};
}

QuadResult integrate_q(const std::function<double(double)>& f, double omega, double kappa_max,
                       double tol) {
    if (!(omega > 0.0))
        throw DomainError("integrate_q: omega must be positive");
    if (!(kappa_max > 0.0))
        throw DomainError("integrate_q: kappa_max must be positive");

    QuadOptions opts;
    opts.rel_tol = tol;

    // q = sqrt(omega^2 - v^2), dq = -v/q dv on the propagating side.
    const auto propagating = [&](double v) {
        const double q = std::sqrt(std::max(omega * omega - v * v, 0.0));
        return q > 0.0 ? f(q) * v / q : 0.0;
    };
    // q = sqrt(omega^2 + kappa^2), dq = kappa/q dkappa on the evanescent side.
    const auto evanescent = [&](double kappa) {
        const double q = std::sqrt(omega * omega + kappa * kappa);
        return f(q) * kappa / q;
    };

    const QuadResult prop = integrate_adaptive(propagating, 0.0, omega, opts);
    const QuadResult evan = integrate_adaptive(evanescent, 0.0, kappa_max, opts);
    return {prop.value + evan.value, prop.error + evan.error,
            prop.evaluations + evan.evaluations};
}

double default_kappa_max(double gap, double omega) {
    return std::max(20.0 / gap, 10.0 * omega);
}

}  // namespace cavkg
