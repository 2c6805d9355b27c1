#include "cavkg/scenario.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "cavkg/version.hpp"
#include "json.hpp"

namespace cavkg {

std::vector<double> AxisSpec::values() const {
    if (count == 0)
        return {};
    if (count == 1)
        return {min};
    std::vector<double> out(count);
    const double step = (max - min) / double(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = min + double(i) * step;
    return out;
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// Ordered key = value store with consumption tracking, so that unknown or
// misspelled keys are reported instead of silently ignored.
class KvStore {
  public:
    explicit KvStore(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("line " + std::to_string(line_no), "expected key = value");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty())
                throw ConfigError("line " + std::to_string(line_no), "empty key");
            if (items_.count(key))
                throw ConfigError(key, "duplicate key");
            items_[key] = value;
        }
    }

    bool has(const std::string& key) const { return items_.count(key) != 0; }

    std::string text(const std::string& key) {
        const auto it = items_.find(key);
        if (it == items_.end())
            throw ConfigError(key, "missing required key");
        consumed_.insert(key);
        return it->second;
    }

    std::string text_or(const std::string& key, const std::string& fallback) {
        return has(key) ? text(key) : fallback;
    }

    double number(const std::string& key) { return to_number(key, text(key)); }

    double number_or(const std::string& key, double fallback) {
        return has(key) ? number(key) : fallback;
    }

    bool boolean_or(const std::string& key, bool fallback) {
        if (!has(key))
            return fallback;
        const std::string v = text(key);
        if (v == "true" || v == "1" || v == "yes")
            return true;
        if (v == "false" || v == "0" || v == "no")
            return false;
        throw ConfigError(key, "expected a boolean, got '" + v + "'");
    }

    // An empty value is a valid empty list (empty grid -> header-only CSV).
    std::vector<double> number_list(const std::string& key) {
        std::vector<double> out;
        const std::string value = text(key);
        if (trim(value).empty())
            return out;
        std::istringstream in(value);
        std::string item;
        while (std::getline(in, item, ','))
            out.push_back(to_number(key, trim(item)));
        return out;
    }

    void finish() const {
        for (const auto& [key, value] : items_)
            if (!consumed_.count(key))
                throw ConfigError(key, "unknown key");
    }

  private:
    double to_number(const std::string& key, const std::string& value) {
        try {
            std::size_t pos = 0;
            const double x = std::stod(value, &pos);
            if (pos != value.size())
                throw std::invalid_argument(value);
            return x;
        } catch (const std::exception&) {
            throw ConfigError(key, "expected a number, got '" + value + "'");
        }
    }

    std::map<std::string, std::string> items_;
    std::set<std::string> consumed_;
};

AxisSpec parse_axis(KvStore& kv, const std::string& prefix) {
    AxisSpec axis;
    axis.min = kv.number(prefix + ".min");
    axis.max = kv.number(prefix + ".max");
    const double count = kv.number(prefix + ".count");
    if (count < 1.0 || count != std::floor(count))
        throw ConfigError(prefix + ".count", "expected a positive integer");
    axis.count = std::size_t(count);
    return axis;
}

void reject_conflicting(KvStore& kv, const std::string& a, const std::string& b) {
    if (kv.has(a) && kv.has(b))
        throw ConfigError(b, "conflicts with " + a + "; provide only one");
}

double parse_temperature(KvStore& kv, const std::string& prefix,
                         const units::NaturalUnits& nu, std::vector<std::string>& conversions) {
    reject_conflicting(kv, prefix + ".temperature_K", prefix + ".temperature");
    if (kv.has(prefix + ".temperature_K")) {
        const double kelvin = kv.number(prefix + ".temperature_K");
        const double natural = nu.temperature_from_K(kelvin);
        conversions.push_back(prefix + ".temperature_K: " + std::to_string(kelvin) + " K -> " +
                              std::to_string(natural));
        return natural;
    }
    return kv.number_or(prefix + ".temperature", 0.0);
}

Material parse_material(KvStore& kv, const std::string& prefix, const units::NaturalUnits& nu,
                        std::vector<std::string>& conversions) {
    const std::string kind = kv.text(prefix + ".kind");
    if (kind == "dielectric") {
        Dielectric mat;
        mat.n = kv.number(prefix + ".n");
        mat.delta = kv.number_or(prefix + ".delta", 0.0);
        if (mat.n < 1.0)
            throw ConfigError(prefix + ".n", "refractive index must be >= 1");
        if (mat.delta < 0.0)
            throw ConfigError(prefix + ".delta", "dissipation must be >= 0");
        return mat;
    }
    if (kind == "vacuum")
        return Dielectric{1.0, 0.0};
    if (kind == "mirror")
        return PerfectMirror{};
    if (kind == "metal") {
        DrudeImpedance drude;
        drude.relaxation_time = kv.number(prefix + ".tau");
        if (drude.relaxation_time <= 0.0)
            throw ConfigError(prefix + ".tau", "relaxation time must be positive");
        reject_conflicting(kv, prefix + ".plasma_frequency", prefix + ".skin_depth_nm");
        if (kv.has(prefix + ".plasma_frequency")) {
            drude.plasma_frequency = kv.number(prefix + ".plasma_frequency");
        } else {
            const double nm = kv.number(prefix + ".skin_depth_nm");
            const double depth = nu.length_from_nm(nm);
            drude.plasma_frequency =
                calibrate_drude_plasma_frequency(drude.relaxation_time, depth, 1.0);
            conversions.push_back(prefix + ".skin_depth_nm: " + std::to_string(nm) + " nm -> " +
                                  std::to_string(depth) + " (plasma_frequency " +
                                  std::to_string(drude.plasma_frequency) + ")");
        }
        return Metal{drude};
    }
    throw ConfigError(prefix + ".kind", "expected dielectric|metal|mirror|vacuum");
}

InterfaceSpec parse_interface(KvStore& kv, const std::string& prefix,
                              const units::NaturalUnits& nu,
                              std::vector<std::string>& conversions, bool allow_velocity) {
    InterfaceSpec spec;
    spec.material = parse_material(kv, prefix, nu, conversions);
    spec.temperature = parse_temperature(kv, prefix, nu, conversions);
    spec.velocity = kv.number_or(prefix + ".velocity", 0.0);
    if (!allow_velocity && spec.velocity != 0.0)
        throw ConfigError(prefix + ".velocity", "only the upper interface may slide");
    if (std::abs(spec.velocity) >= 1.0)
        throw ConfigError(prefix + ".velocity", "|velocity| must be < 1");
    if (spec.temperature < 0.0)
        throw ConfigError(prefix + ".temperature", "temperature must be >= 0");
    return spec;
}

}  // namespace

Scenario scenario_from_text(const std::string& text) {
    KvStore kv(text);
    Scenario s;

    s.unit_system.reference_temperature_K = kv.number_or("units.reference_temperature_K", 300.0);
    if (s.unit_system.reference_temperature_K <= 0.0)
        throw ConfigError("units.reference_temperature_K", "must be positive");

    s.name = kv.text_or("scenario.name", "scenario");

    reject_conflicting(kv, "cavity.gap_um", "cavity.gap");
    if (kv.has("cavity.gap_um")) {
        const double um = kv.number("cavity.gap_um");
        s.cavity.gap = s.unit_system.length_from_um(um);
        s.conversions.push_back("cavity.gap_um: " + std::to_string(um) + " um -> " +
                                std::to_string(s.cavity.gap));
    } else {
        s.cavity.gap = kv.number("cavity.gap");
    }
    if (s.cavity.gap <= 0.0)
        throw ConfigError("cavity.gap", "gap must be positive");

    s.cavity.lower = parse_interface(kv, "cavity.lower", s.unit_system, s.conversions, false);
    s.cavity.upper = parse_interface(kv, "cavity.upper", s.unit_system, s.conversions, true);

    const std::string kind = kv.text_or("grid.kind", "cylindrical");
    if (kind == "cartesian")
        s.grid.kind = GridSpec::Kind::cartesian;
    else if (kind == "cylindrical")
        s.grid.kind = GridSpec::Kind::cylindrical;
    else
        throw ConfigError("grid.kind", "expected cartesian|cylindrical");

    if (kv.has("grid.omega"))
        s.grid.omega = kv.number_list("grid.omega");
    else
        s.grid.omega = parse_axis(kv, "grid.omega").values();
    for (const double w : s.grid.omega)
        if (w == 0.0)
            throw ConfigError("grid.omega", "omega = 0 is excluded from grids");

    if (s.grid.kind == GridSpec::Kind::cartesian) {
        s.grid.qx = parse_axis(kv, "grid.qx");
        s.grid.qy = parse_axis(kv, "grid.qy");
    } else {
        s.grid.q = parse_axis(kv, "grid.q");
    }

    s.subtract_vacuum = kv.boolean_or("options.subtract_vacuum", false);
    s.environment_temperature = kv.number_or("options.environment_temperature", 0.0);
    const double threads = kv.number_or("options.threads", 1.0);
    if (threads < 1.0 || threads != std::floor(threads))
        throw ConfigError("options.threads", "expected a positive integer");
    s.threads = int(threads);

    kv.finish();
    try {
        validate(s.cavity);
    } catch (const DomainError& e) {
        throw ConfigError("cavity", e.what());
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path, "cannot open config file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return scenario_from_text(buffer.str());
}

std::vector<std::string> preset_names() { return {"fig1_sliding", "fig2_hot_cold"}; }

namespace {

Scenario fig1_scenario(double v, const std::string& tag) {
    Scenario s;
    s.name = "fig1_sliding_" + tag;
    s.cavity.gap = 0.4;  // a = 0.4 / omega at omega = 1
    s.cavity.lower = {Dielectric{1.3, 0.0}, 0.0, 0.0};
    s.cavity.upper = {Dielectric{1.3, 0.0}, 0.0, v};
    s.grid.kind = GridSpec::Kind::cartesian;
    s.grid.omega = {1.0};
    s.grid.qx = {-4.0, 8.0, 200};
    s.grid.qy = {-6.0, 6.0, 200};
    s.threads = 4;
    return s;
}

Scenario fig2_scenario() {
    Scenario s;
    s.name = "fig2_hot_cold";
    s.unit_system.reference_temperature_K = 300.0;
    s.cavity.gap = 1.1;  // 1.1 thermal wavelengths
    s.cavity.lower = {Dielectric{1.3, 0.0}, s.unit_system.temperature_from_K(390.0), 0.0};
    const double skin_depth = s.unit_system.length_from_nm(31.0);
    const double wp = calibrate_drude_plasma_frequency(1.1, skin_depth, 1.0);
    s.cavity.upper = {Metal{DrudeImpedance{wp, 1.1}},
                      s.unit_system.temperature_from_K(210.0), 0.0};
    s.conversions.push_back("upper.skin_depth 31 nm -> plasma_frequency " + std::to_string(wp));
    s.grid.kind = GridSpec::Kind::cylindrical;
    s.grid.omega = AxisSpec{0.25, 8.0, 200}.values();
    s.grid.q = {0.02, 8.31, 200};
    s.threads = 4;
    return s;
}

}  // namespace

std::vector<Scenario> preset_scenarios(const std::string& name) {
    if (name == "fig1_sliding") {
        // Sub- and super-Cherenkov sliding speeds; v = 0.83 places the far
        // hyperbola vertex at qx ~ 5.9 omega.
        return {fig1_scenario(0.5, "v0.50"), fig1_scenario(0.83, "v0.83")};
    }
    if (name == "fig2_hot_cold")
        return {fig2_scenario()};
    throw ConfigError("preset", "unknown preset '" + name + "'");
}

namespace {

GridRow compute_row(const Scenario& s, double omega, double q1, double q2) {
    GridRow row;
    row.omega = omega;
    row.q1 = q1;
    row.q2 = q2;
    row.flags = s.subtract_vacuum ? kFlagVacuumSubtracted : kFlagOk;

    const SpectralPoint pt = s.grid.kind == GridSpec::Kind::cartesian
                                 ? SpectralPoint{omega, q1, q2}
                                 : SpectralPoint{omega, q1, 0.0};
    try {
        const EnergyOptions opts{s.subtract_vacuum, s.environment_temperature};
        const auto point = energy_per_area(s.cavity, pt, opts);
        row.U = point.U;
        if (point.resonance_skipped)
            row.flags |= kFlagResonanceSkipped;
    } catch (const LightConeError&) {
        row.flags |= kFlagLightConeSkipped;
    }
    return row;
}

}  // namespace

GridResult evaluate_grid(const Scenario& s) {
    std::vector<std::array<double, 3>> coords;
    if (s.grid.kind == GridSpec::Kind::cartesian) {
        const auto qxs = s.grid.qx.values();
        const auto qys = s.grid.qy.values();
        coords.reserve(s.grid.omega.size() * qxs.size() * qys.size());
        for (const double w : s.grid.omega)
            for (const double qx : qxs)
                for (const double qy : qys)
                    coords.push_back({w, qx, qy});
    } else {
        const auto qs = s.grid.q.values();
        coords.reserve(s.grid.omega.size() * qs.size());
        for (const double w : s.grid.omega)
            for (const double q : qs)
                coords.push_back({w, q, 0.0});
    }

    GridResult result;
    result.rows.resize(coords.size());

    const int n_threads = std::max(1, s.threads);
    std::atomic<std::size_t> next{0};
    const auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= coords.size())
                return;
            result.rows[i] = compute_row(s, coords[i][0], coords[i][1], coords[i][2]);
        }
    };

    if (n_threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }

    for (const auto& row : result.rows)
        if (row.flags & (kFlagResonanceSkipped | kFlagLightConeSkipped))
            ++result.skipped;
    return result;
}

namespace {

std::string format_sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

double evanescent_tail_bound(const Scenario& s) {
    // Largest neglected evanescent weight e^{-2 kappa a} at the grid edge.
    double q_max = 0.0;
    if (s.grid.kind == GridSpec::Kind::cartesian)
        q_max = std::hypot(std::max(std::abs(s.grid.qx.min), std::abs(s.grid.qx.max)),
                           std::max(std::abs(s.grid.qy.min), std::abs(s.grid.qy.max)));
    else
        q_max = std::max(std::abs(s.grid.q.min), std::abs(s.grid.q.max));
    double omega_max = 0.0;
    for (const double w : s.grid.omega)
        omega_max = std::max(omega_max, std::abs(w));
    if (q_max <= omega_max)
        return 1.0;  // grid does not reach into the evanescent sector
    const double kappa_edge = std::sqrt(q_max * q_max - omega_max * omega_max);
    return std::exp(-2.0 * kappa_edge * s.cavity.gap);
}

nlohmann::json material_json(const Material& mat) {
    nlohmann::json j;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Dielectric>) {
                j["kind"] = m.n == 1.0 && m.delta == 0.0 ? "vacuum" : "dielectric";
                j["n"] = m.n;
                j["delta"] = m.delta;
            } else if constexpr (std::is_same_v<T, Metal>) {
                j["kind"] = "metal";
                j["plasma_frequency"] = m.impedance.plasma_frequency;
                j["tau"] = m.impedance.relaxation_time;
            } else {
                j["kind"] = "mirror";
            }
        },
        mat);
    return j;
}

nlohmann::json interface_json(const InterfaceSpec& spec) {
    nlohmann::json j = material_json(spec.material);
    j["temperature"] = spec.temperature;
    j["velocity"] = spec.velocity;
    return j;
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot write " + tmp.string());
        out << content;
        if (!out)
            throw Error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

std::string scenario_csv(const Scenario& s, const GridResult& result) {
    std::string out;
    const bool cartesian = s.grid.kind == GridSpec::Kind::cartesian;
    out += cartesian ? "omega,qx,qy,U,flags\n" : "omega,q,U,flags\n";
    for (const auto& row : result.rows) {
        out += format_sci(row.omega);
        out += ',';
        out += format_sci(row.q1);
        out += ',';
        if (cartesian) {
            out += format_sci(row.q2);
            out += ',';
        }
        out += format_sci(row.U);
        out += ',';
        out += std::to_string(row.flags);
        out += '\n';
    }
    return out;
}

RunSummary run_scenario(const Scenario& s, const std::string& out_dir) {
    const GridResult result = evaluate_grid(s);

    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    RunSummary summary;
    summary.points = result.rows.size();
    summary.skipped = result.skipped;

    const auto csv_path = dir / (s.name + ".csv");
    write_atomically(csv_path, scenario_csv(s, result));
    summary.csv_path = csv_path.string();

    nlohmann::json j;
    j["scenario"] = s.name;
    j["library_version"] = kVersion;
    j["config"]["cavity"]["gap"] = s.cavity.gap;
    j["config"]["cavity"]["lower"] = interface_json(s.cavity.lower);
    j["config"]["cavity"]["upper"] = interface_json(s.cavity.upper);
    j["config"]["grid"]["kind"] =
        s.grid.kind == GridSpec::Kind::cartesian ? "cartesian" : "cylindrical";
    j["config"]["grid"]["omega"] = s.grid.omega;
    if (s.grid.kind == GridSpec::Kind::cartesian) {
        j["config"]["grid"]["qx"] = {{"min", s.grid.qx.min}, {"max", s.grid.qx.max},
                                     {"count", s.grid.qx.count}};
        j["config"]["grid"]["qy"] = {{"min", s.grid.qy.min}, {"max", s.grid.qy.max},
                                     {"count", s.grid.qy.count}};
    } else {
        j["config"]["grid"]["q"] = {{"min", s.grid.q.min}, {"max", s.grid.q.max},
                                    {"count", s.grid.q.count}};
    }
    j["config"]["options"]["subtract_vacuum"] = s.subtract_vacuum;
    j["config"]["options"]["environment_temperature"] = s.environment_temperature;
    j["config"]["options"]["threads"] = s.threads;
    j["units"]["reference_temperature_K"] = s.unit_system.reference_temperature_K;
    j["units"]["length_unit_um"] = s.unit_system.length_unit_m() * 1e6;
    j["units"]["conversions"] = s.conversions;
    j["tail_bounds"]["propagating"] = "complete (sector fully inside the grid)";
    j["tail_bounds"]["evanescent_exp_bound"] = evanescent_tail_bound(s);
    j["points"] = summary.points;
    j["skipped"] = summary.skipped;

    const auto json_path = dir / (s.name + ".json");
    write_atomically(json_path, j.dump(2) + "\n");
    summary.json_path = json_path.string();
    return summary;
}

}  // namespace cavkg
