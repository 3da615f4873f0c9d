#pragma once

// Physical constants (CODATA 2018) and boundary unit helpers.
// Everything internal to the library is strict SI.

namespace trapforge {

inline constexpr double k_elementary_charge = 1.602176634e-19;   // C
inline constexpr double k_epsilon0 = 8.8541878128e-12;           // F/m
inline constexpr double k_hbar = 1.054571817e-34;                // J s
inline constexpr double k_amu = 1.66053906660e-27;               // kg
inline constexpr double k_coulomb = k_elementary_charge * k_elementary_charge
                                    / (4.0 * 3.14159265358979323846 * k_epsilon0);
inline constexpr double k_pi = 3.14159265358979323846;

// realization of "infinite" electrode extents; truncation error at the
// 100 um scale is below 1e-10
inline constexpr double k_infinite_extent = 1.0e6;               // m

constexpr double from_um(double um) { return um * 1e-6; }
constexpr double to_um(double m) { return m * 1e6; }
constexpr double from_mhz(double mhz) { return 2.0 * k_pi * mhz * 1e6; }  // -> rad/s
constexpr double from_amu(double amu) { return amu * k_amu; }

} // namespace trapforge
