#include "nvres/resonator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nvres/constants.hpp"

namespace nvres {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) throw std::domain_error(std::string("resonator: ") + name + " must be > 0");
}

void validate(const CantileverGeometry& g) {
    require_positive(g.length_1, "length_1");
    require_positive(g.length_2, "length_2");
    require_positive(g.width_1, "width_1");
    require_positive(g.width_2, "width_2");
    require_positive(g.thickness_1, "thickness_1");
    require_positive(g.thickness_2, "thickness_2");
    require_positive(g.mass_1, "mass_1");
    require_positive(g.mass_2, "mass_2");
    if (!(g.quality_1 >= 1.0) || !(g.quality_2 >= 1.0))
        throw std::domain_error("resonator: quality factors must be >= 1");
}

void validate(const MaterialConstants& m) {
    require_positive(m.young_modulus, "young_modulus");
    require_positive(m.density, "density");
}

}  // namespace

SpringPair spring_constants(const CantileverGeometry& geom, const MaterialConstants& mat) {
    validate(geom);
    validate(mat);
    const auto cube = [](double x) { return x * x * x; };
    return {mat.young_modulus * geom.width_1 * cube(geom.thickness_1) / cube(geom.length_1),
            mat.young_modulus * geom.width_2 * cube(geom.thickness_2) / cube(geom.length_2)};
}

std::pair<double, double> free_frequencies(const CantileverGeometry& geom,
                                           const MaterialConstants& mat) {
    validate(geom);
    validate(mat);
    const double pref = 1.8 * 1.8;
    const double w1 = pref * std::sqrt(mat.young_modulus * geom.thickness_1 * geom.thickness_1 /
                                       (3.0 * mat.density)) /
                      (2.0 * geom.length_1 * geom.length_1);
    const double w2 = pref * std::sqrt(mat.young_modulus * geom.thickness_2 * geom.thickness_2 /
                                       mat.density) /
                      (2.0 * geom.length_2 * geom.length_2);
    const double two_pi = 2.0 * std::numbers::pi;
    return {w1 / two_pi, w2 / two_pi};
}

NormalModes normal_modes(const SpringPair& springs, double mass_1, double mass_2) {
    require_positive(springs.k_1, "k_1");
    require_positive(springs.k_2, "k_2");
    require_positive(mass_1, "mass_1");
    require_positive(mass_2, "mass_2");

    NormalModes nm{};
    nm.omega_1 = std::sqrt((springs.k_1 + springs.k_2) / mass_1);
    nm.omega_21 = std::sqrt(springs.k_2 / mass_1);
    nm.omega_2 = std::sqrt(springs.k_2 / mass_2);

    const double s1 = nm.omega_1 * nm.omega_1;
    const double s2 = nm.omega_2 * nm.omega_2;
    const double s21 = nm.omega_21 * nm.omega_21;
    const double disc = std::sqrt((s1 - s2) * (s1 - s2) + 4.0 * s2 * s21);
    nm.big_omega_1 = std::sqrt(0.5 * (s1 + s2 + disc));
    nm.big_omega_2 = std::sqrt(0.5 * (s1 + s2 - disc));

    // Amplitude ratio B/A of each mode from the first secular equation,
    // kappa = (omega_1^2 - Omega^2)/omega_21^2. The upper branch is
    // anti-phase, the lower in-phase.
    nm.kappa_1 = (s1 - nm.big_omega_1 * nm.big_omega_1) / s21;
    nm.kappa_2 = (s1 - nm.big_omega_2 * nm.big_omega_2) / s21;

    nm.eff_mass_1 = mass_1 + mass_2 * nm.kappa_1 * nm.kappa_1;
    nm.eff_mass_2 = mass_1 + mass_2 * nm.kappa_2 * nm.kappa_2;
    nm.zp_amp_1 = std::sqrt(constants::hbar / (2.0 * nm.eff_mass_1 * nm.big_omega_1));
    nm.zp_amp_2 = std::sqrt(constants::hbar / (2.0 * nm.eff_mass_2 * nm.big_omega_2));
    return nm;
}

ValidityReport validity_check(const CantileverGeometry& geom, const MaterialConstants& mat,
                              const NormalModes& nm, double threshold) {
    const auto [nu1, nu2] = free_frequencies(geom, mat);
    const double two_pi = 2.0 * std::numbers::pi;
    ValidityReport rep{};
    rep.ratio_1 = (two_pi * nu1 / geom.quality_1) / nm.omega_1;
    rep.ratio_2 = (two_pi * nu2 / geom.quality_2) / nm.omega_2;
    rep.pass = rep.ratio_1 < threshold && rep.ratio_2 < threshold;
    return rep;
}

TipField tip_field(double gradient, const NormalModes& nm, double g_factor) {
    require_positive(gradient, "gradient");
    TipField tf{};
    tf.gradient = gradient;
    tf.g_factor = g_factor;
    tf.bohr_magneton = constants::bohr_magneton;
    tf.lambda_1 = g_factor * constants::bohr_magneton * gradient * nm.zp_amp_1 / constants::hbar;
    tf.lambda_2 = g_factor * constants::bohr_magneton * gradient * nm.zp_amp_2 / constants::hbar;
    return tf;
}

double beam_mass(const CantileverGeometry& geom, const MaterialConstants& mat, int which) {
    validate(geom);
    validate(mat);
    if (which == 1) return mat.density * geom.length_1 * geom.width_1 * geom.thickness_1;
    if (which == 2) return mat.density * geom.length_2 * geom.width_2 * geom.thickness_2;
    throw std::domain_error("beam_mass: which must be 1 or 2");
}

}  // namespace nvres
