// SI <-> natural-unit conversions anchored at a reference temperature.
// Natural units: c = hbar = kB = 1; the energy unit is kB T_ref and the
// length unit is the thermal wavelength lambda_T(T_ref) = hbar c / (kB T_ref).
#pragma once

#include "cavkg/errors.hpp"

namespace cavkg::units {

// hbar c / kB in meter kelvin.
inline constexpr double hbar_c_over_kB_mK = 2.2898845206107345e-3;

double thermal_wavelength_m(double temperature_K);
double thermal_wavelength_um(double temperature_K);

struct NaturalUnits {
    double reference_temperature_K = 300.0;

    double length_unit_m() const;

    double temperature_from_K(double kelvin) const;
    double K_from_temperature(double natural) const;

    double length_from_m(double meters) const;
    double m_from_length(double natural) const;
    double length_from_um(double um) const;
    double um_from_length(double natural) const;
    double length_from_nm(double nm) const;

    double time_from_s(double seconds) const;
    double s_from_time(double natural) const;
};

}  // namespace cavkg::units
