// Error types and the numerical floors shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace cavkg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation point sits on (or too close to) the vacuum light cone.
struct LightConeError : Error {
    using Error::Error;
};

// omega = 0 or a coordinate outside the half-space / gap.
struct DomainError : Error {
    using Error::Error;
};

// |q_z + q_ze| or similar reflection denominator collapsed.
struct DegenerateDenominatorError : Error {
    using Error::Error;
};

// Boost mixing matrix undefined (q = 0 or q' = 0 under boost).
struct DegeneratePointError : Error {
    using Error::Error;
};

// I + R not invertible (perfect mirror).
struct SingularAdmittanceError : Error {
    using Error::Error;
};

// |det(I - R+ R- e^{2iq_z a})| below floor: lossless guided-mode pole.
struct CavityResonanceError : Error {
    using Error::Error;
};

// Conic classification undefined at n v = 1 exactly.
struct DegenerateConicError : Error {
    using Error::Error;
};

// Adaptive quadrature failed to reach the requested tolerance.
struct ToleranceError : Error {
    using Error::Error;
};

// Scenario configuration problem; carries the offending field path.
struct ConfigError : Error {
    explicit ConfigError(const std::string& field_path, const std::string& what)
        : Error("config error at '" + field_path + "': " + what), field(field_path) {}
    std::string field;
};

namespace tol {

// Exclusion band around the light cone, applied to |omega^2 - q^2|.
inline constexpr double light_cone_band = 1e-12;
// Floor on |det U| before a cavity point is declared resonant.
inline constexpr double resonance_floor = 1e-10;
// Relative floor for reflection-coefficient denominators.
inline constexpr double denominator_floor = 1e-14;
// |eps * a| below which the analytic z-integral uses its limit value a.
inline constexpr double z_integral_floor = 1e-8;
// Coordinate slack for gap / half-space membership checks.
inline constexpr double domain_slack = 1e-12;

}  // namespace tol

}  // namespace cavkg
