#pragma once

#include <utility>

namespace nvres {

struct MaterialConstants {
    double young_modulus;  // Pa
    double density;        // kg/m^3
};

struct CantileverGeometry {
    double length_1, length_2;        // m
    double width_1, width_2;          // m
    double thickness_1, thickness_2;  // m
    double mass_1, mass_2;            // kg (effective rod masses, independent inputs)
    double quality_1, quality_2;      // dimensionless, >= 1
};

struct SpringPair {
    double k_1, k_2;  // kg/s^2
};

/// Normal-mode data of the two-rod system. big_omega_1 is the upper branch
/// (big_omega_1 > big_omega_2); kappa_i is the tip amplitude ratio B/A of the
/// mode oscillating at big_omega_i, so kappa_1 < 0 (anti-phase) and
/// kappa_2 > 0 (in-phase), with kappa_1*kappa_2 = -omega_2^2/omega_21^2.
struct NormalModes {
    double omega_1, omega_2, omega_21;    // rad/s
    double big_omega_1, big_omega_2;      // rad/s
    double kappa_1, kappa_2;              // dimensionless
    double eff_mass_1, eff_mass_2;        // kg
    double zp_amp_1, zp_amp_2;            // m
};

struct TipField {
    double gradient;       // T/m (required input; no default)
    double g_factor;       // dimensionless
    double bohr_magneton;  // J/T
    double lambda_1, lambda_2;  // rad/s
};

struct ValidityReport {
    double ratio_1, ratio_2;  // (2 pi nu_{i-0} / Q_i) / omega_i
    bool pass;                // both ratios < threshold (strict)
};

/// k_i = Y w_i d_i^3 / L_i^3.
SpringPair spring_constants(const CantileverGeometry& geom, const MaterialConstants& mat);

/// Free resonance frequencies (Hz) of the two rods from the clamped-beam
/// formulas, mode 1 carrying the extra 1/3 under the root:
///   2 pi nu_{1-0} = 1.8^2 sqrt(Y d1^2 / (3 rho)) / (2 L1^2)
///   2 pi nu_{2-0} = 1.8^2 sqrt(Y d2^2 / rho) / (2 L2^2)
std::pair<double, double> free_frequencies(const CantileverGeometry& geom,
                                           const MaterialConstants& mat);

NormalModes normal_modes(const SpringPair& springs, double mass_1, double mass_2);

/// Weak-damping check: (2 pi nu_{i-0}/Q_i) / omega_i < threshold for both rods.
ValidityReport validity_check(const CantileverGeometry& geom, const MaterialConstants& mat,
                              const NormalModes& nm, double threshold = 1e-2);

/// lambda_i = g mu_B G a_{i0} / hbar.
TipField tip_field(double gradient, const NormalModes& nm, double g_factor = 2.0);

/// rho * L * w * d for one rod (which = 1 or 2). Provided for reference only;
/// normal_modes always takes the masses passed to it.
double beam_mass(const CantileverGeometry& geom, const MaterialConstants& mat, int which);

}  // namespace nvres
