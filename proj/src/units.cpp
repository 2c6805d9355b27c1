#include "cavkg/units.hpp"

namespace cavkg::units {

namespace {
constexpr double kSpeedOfLight = 299792458.0;  // m/s
}

double thermal_wavelength_m(double temperature_K) {
    if (!(temperature_K > 0.0))
        throw DomainError("thermal_wavelength_m: temperature must be positive");
    return hbar_c_over_kB_mK / temperature_K;
}

double thermal_wavelength_um(double temperature_K) {
    return thermal_wavelength_m(temperature_K) * 1e6;
}

double NaturalUnits::length_unit_m() const {
    return thermal_wavelength_m(reference_temperature_K);
}

double NaturalUnits::temperature_from_K(double kelvin) const {
    if (kelvin < 0.0)
        throw DomainError("temperature_from_K: temperature must be >= 0");
    return kelvin / reference_temperature_K;
}

double NaturalUnits::K_from_temperature(double natural) const {
    return natural * reference_temperature_K;
}

double NaturalUnits::length_from_m(double meters) const { return meters / length_unit_m(); }
double NaturalUnits::m_from_length(double natural) const { return natural * length_unit_m(); }
double NaturalUnits::length_from_um(double um) const { return length_from_m(um * 1e-6); }
double NaturalUnits::um_from_length(double natural) const { return m_from_length(natural) * 1e6; }
double NaturalUnits::length_from_nm(double nm) const { return length_from_m(nm * 1e-9); }

double NaturalUnits::time_from_s(double seconds) const {
    return seconds * kSpeedOfLight / length_unit_m();
}

double NaturalUnits::s_from_time(double natural) const {
    return natural * length_unit_m() / kSpeedOfLight;
}

}  // namespace cavkg::units
