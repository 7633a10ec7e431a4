#pragma once

namespace nvres::constants {

inline constexpr double hbar = 1.054571817e-34;          // J s (CODATA)
inline constexpr double bohr_magneton = 9.2740100783e-24;  // J/T (CODATA)
inline constexpr double nv_g_factor = 2.0;

}  // namespace nvres::constants
