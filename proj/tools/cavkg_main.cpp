// Command-line front end: scenario runs, presets, and the quick invariant
// sweep (--seed-check).
#include <cstdio>
#include <random>

#include "CLI11.hpp"
#include "cavkg/scenario.hpp"
#include "cavkg/version.hpp"

namespace {

using namespace cavkg;

SpectralPoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double omega = (u(rng) < 0.5 ? -1.0 : 1.0) * (0.2 + 2.8 * u(rng));
    const bool evanescent = u(rng) < 0.5;
    const double q = evanescent ? std::abs(omega) * (1.05 + 2.0 * u(rng))
                                : std::abs(omega) * (0.05 + 0.9 * u(rng));
    const double phi = 2.0 * M_PI * u(rng);
    return {omega, q * std::cos(phi), q * std::sin(phi)};
}

// Randomized invariant sweep over the symmetry relations; returns the
// number of failures.
int seed_check() {
    std::mt19937_64 rng(20250809);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    const CavityConfig configs[] = {
        {1.0, {Dielectric{1.3, 0.0}, 0.4, 0.0}, {Dielectric{2.0, 0.05}, 1.0, 0.0}},
        {0.7, {Dielectric{1.3, 0.0}, 1.3, 0.0}, {Metal{DrudeImpedance{300.0, 1.1}}, 0.7, 0.0}},
        {0.4, {Dielectric{1.3, 0.0}, 0.0, 0.0}, {Dielectric{1.3, 0.0}, 0.0, 0.5}},
    };

    int failures = 0;
    double worst_identity = 0.0, worst_reciprocity = 0.0, worst_parity = 0.0;
    int used = 0;

    for (int trial = 0; trial < 120; ++trial) {
        const auto& cfg = configs[trial % 3];
        const SpectralPoint pt = random_point(rng);
        const double a = cfg.gap;
        const double z = (u(rng) - 0.5) * a * 0.98;
        const double zp = (u(rng) - 0.5) * a * 0.98;
        try {
            const double res = verify_surface_identity(cfg, pt, z, zp);
            worst_identity = std::max(worst_identity, res);

            const auto gf = cavity_greens(cfg, pt);
            worst_reciprocity = std::max(
                worst_reciprocity, norm(gf.value(z, zp) - gf.value(zp, z).transpose()));

            const auto gf_neg = cavity_greens(cfg, pt.negated());
            worst_parity = std::max(
                worst_parity, norm(gf_neg.value(z, zp) - gf.value(z, zp).conjugate()));
            ++used;
        } catch (const CavityResonanceError&) {
            continue;  // lossless guided-mode pole; skip the sample
        }
    }

    const auto report = [&](const char* name, double worst, double bound) {
        const bool ok = worst < bound;
        std::printf("%-24s %s   (worst %.3e, bound %.0e)\n", name, ok ? "PASS" : "FAIL", worst,
                    bound);
        if (!ok)
            ++failures;
    };
    std::printf("seed-check over %d samples\n", used);
    report("surface identity", worst_identity, 1e-9);
    report("reciprocity", worst_reciprocity, 1e-11);
    report("reality (parity)", worst_parity, 1e-11);
    return failures;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Non-equilibrium field correlations in a planar cavity"};
    app.set_version_flag("--version", cavkg::kVersion);

    std::string config_path, preset_name, out_dir = ".";
    bool subtract_vacuum = false;
    bool run_seed_check = false;
    int threads = 0;

    app.add_option("--config", config_path, "Scenario config file (key = value)");
    app.add_option("--preset", preset_name, "Preset scenario (fig1_sliding, fig2_hot_cold)");
    app.add_option("--out", out_dir, "Output directory");
    app.add_flag("--subtract-vacuum", subtract_vacuum, "Subtract the free-space spectrum");
    app.add_option("--threads", threads, "Worker threads (0 = keep scenario setting)");
    app.add_flag("--seed-check", run_seed_check, "Run the randomized invariant sweep and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_seed_check)
            return seed_check() == 0 ? 0 : 3;

        std::vector<cavkg::Scenario> scenarios;
        if (!config_path.empty())
            scenarios.push_back(cavkg::load_scenario(config_path));
        else if (!preset_name.empty())
            scenarios = cavkg::preset_scenarios(preset_name);
        else {
            std::fprintf(stderr, "error: provide --config, --preset, or --seed-check\n");
            return 2;
        }

        for (auto& s : scenarios) {
            if (subtract_vacuum)
                s.subtract_vacuum = true;
            if (threads > 0)
                s.threads = threads;
            const auto summary = cavkg::run_scenario(s, out_dir);
            std::printf("%s: %zu points (%zu skipped) -> %s\n", s.name.c_str(), summary.points,
                        summary.skipped, summary.csv_path.c_str());
        }
        return 0;
    } catch (const cavkg::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const cavkg::ToleranceError& e) {
        std::fprintf(stderr, "tolerance failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
