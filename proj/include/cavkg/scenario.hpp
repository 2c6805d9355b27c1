// Scenario ingestion (flat key = value config), grid sweeps, presets, and
// tabular output (CSV + JSON sidecar).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cavkg/energy.hpp"
#include "cavkg/units.hpp"

namespace cavkg {

// Row flags in the CSV output.
enum RowFlag : int {
    kFlagOk = 0,
    kFlagResonanceSkipped = 1,
    kFlagVacuumSubtracted = 2,
    kFlagLightConeSkipped = 4,
};

struct AxisSpec {
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 1;

    std::vector<double> values() const;
};

struct GridSpec {
    enum class Kind { cartesian, cylindrical };
    Kind kind = Kind::cylindrical;
    std::vector<double> omega;  // explicit frequency list
    AxisSpec qx, qy;            // cartesian
    AxisSpec q;                 // cylindrical
};

struct Scenario {
    std::string name = "scenario";
    CavityConfig cavity;
    GridSpec grid;
    bool subtract_vacuum = false;
    double environment_temperature = 0.0;
    int threads = 1;
    units::NaturalUnits unit_system;
    // human-readable record of SI -> natural conversions applied
    std::vector<std::string> conversions;
};

// Parses the flat dotted-key config format (see README for the schema).
Scenario load_scenario(const std::string& path);
Scenario scenario_from_text(const std::string& text);

std::vector<std::string> preset_names();
// A preset may expand to several scenarios (one per sliding velocity).
std::vector<Scenario> preset_scenarios(const std::string& name);

struct GridRow {
    double omega = 0.0;
    double q1 = 0.0, q2 = 0.0;  // (qx, qy) or (q, unused)
    double U = 0.0;
    int flags = 0;
};

struct GridResult {
    std::vector<GridRow> rows;
    std::size_t skipped = 0;
};

// Evaluates every grid point (worker pool, results in fixed row order).
GridResult evaluate_grid(const Scenario& scenario);

// CSV serialization: header omega,qx,qy,U,flags (cartesian) or
// omega,q,U,flags (cylindrical); 17 significant digits.
std::string scenario_csv(const Scenario& scenario, const GridResult& result);

struct RunSummary {
    std::string csv_path;
    std::string json_path;
    std::size_t points = 0;
    std::size_t skipped = 0;
};

// Runs the scenario and writes <prefix>.csv / <prefix>.json into out_dir
// (write-then-rename; no partial outputs are left behind).
RunSummary run_scenario(const Scenario& scenario, const std::string& out_dir);

}  // namespace cavkg
