#pragma once

namespace mzi::constants {

// CODATA 2018 values, SI units.
inline constexpr double kSpeedOfLight = 299792458.0;        // m/s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kHbar = 1.054571817e-34;            // J s
inline constexpr double kBoltzmann = 1.380649e-23;          // J/K

}  // namespace mzi::constants
