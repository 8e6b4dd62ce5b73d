#pragma once

namespace raqr::constants {

// CODATA 2018 exact/recommended values.
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double epsilon0 = 8.8541878128e-12;   // F/m
inline constexpr double electron_charge = 1.602176634e-19;  // C
inline constexpr double boltzmann = 1.380649e-23;      // J/K
inline constexpr double speed_of_light = 299792458.0;  // m/s
inline constexpr double bohr_radius = 52.9e-12;        // m (table value used by the dipole moments)
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

}  // namespace raqr::constants
