#include "nvres/dressing.hpp"

#include <cmath>
#include <stdexcept>

#include "nvres/constants.hpp"

namespace nvres {

namespace {

void validate(const DriveParams& d) {
    if (!(d.rabi_plus() > 0.0) || !(d.rabi_minus() > 0.0))
        throw std::domain_error("dressing: rabi_plus and rabi_minus must be > 0");
}

}  // namespace

DriveParams DriveParams::with_field(double rabi_zero, double b_field, double detuning) {
    return {rabi_zero, constants::bohr_magneton * b_field / constants::hbar, detuning};
}

DressedSpin dress(const DriveParams& drive) {
    validate(drive);
    const double op = drive.rabi_plus();
    const double om = drive.rabi_minus();
    const double omega2 = 0.5 * (op * op + om * om);
    const double omega = std::sqrt(omega2);
    const double root = std::sqrt(drive.detuning * drive.detuning + 2.0 * omega2);

    DressedSpin ds{};
    ds.rms_rabi = omega;
    ds.theta = 0.5 * std::atan2(-std::numbers::sqrt2 * omega, drive.detuning);
    ds.omega_d = -drive.detuning;
    ds.omega_e = 0.5 * (-drive.detuning + root);
    ds.omega_g = 0.5 * (-drive.detuning - root);
    return ds;
}

std::pair<double, double> spin_resonator_couplings(const DriveParams& drive, const TipField& tip) {
    const DressedSpin ds = dress(drive);
    const double w = drive.rabi_plus() * drive.rabi_minus() / (ds.rms_rabi * ds.rms_rabi);
    return {-tip.lambda_1 * w * std::sin(ds.theta), tip.lambda_2 * w * std::cos(ds.theta)};
}

DressedSpin dress_with_couplings(const DriveParams& drive, const TipField& tip) {
    DressedSpin ds = dress(drive);
    const auto [lg, le] = spin_resonator_couplings(drive, tip);
    ds.lambda_g = lg;
    ds.lambda_e = le;
    return ds;
}

EffectiveCouplings effective_couplings(const DressedSpin& ds, const NormalModes& nm, int n_1,
                                       int n_3, double resonance_floor) {
    if (n_1 < 0 || n_3 < 0) throw std::domain_error("effective_couplings: occupations must be >= 0");
    EffectiveCouplings ec{};
    ec.delta_1 = nm.big_omega_1 - ds.omega_e;
    ec.delta_2 = nm.big_omega_2 + ds.omega_g;
    if (std::abs(ec.delta_1) < resonance_floor * nm.big_omega_1 ||
        std::abs(ec.delta_2) < resonance_floor * nm.big_omega_2)
        throw std::domain_error(
            "effective_couplings: resonance (|Delta_i| below floor), second-order elimination invalid");
    ec.alpha = ds.lambda_g * ds.lambda_g / ec.delta_1;
    ec.beta = ds.lambda_e * ds.lambda_e / ec.delta_2;
    ec.n_1 = n_1;
    ec.n_3 = n_3;
    return ec;
}

double persistent_entanglement_residual(double alpha, double beta) {
    if (alpha + beta == 0.0)
        throw std::domain_error("persistent_entanglement_condition: alpha + beta = 0");
    return (alpha - beta) / (alpha + beta);
}

double persistent_entanglement_condition(const DressedSpin& ds, const NormalModes& nm) {
    const auto ec = effective_couplings(ds, nm, 0, 0);
    return persistent_entanglement_residual(ec.alpha, ec.beta);
}

Mat3 bare_hamiltonian(const DriveParams& drive) {
    validate(drive);
    Mat3 h;
    h(0, 0) = -drive.detuning;
    h(2, 2) = -drive.detuning;
    h(0, 1) = h(1, 0) = 0.5 * drive.rabi_minus();
    h(1, 2) = h(2, 1) = 0.5 * drive.rabi_plus();
    return h;
}

Mat3 dressed_basis(const DriveParams& drive) {
    const DressedSpin ds = dress(drive);
    const double op = drive.rabi_plus();
    const double om = drive.rabi_minus();
    const double inv = 1.0 / (std::numbers::sqrt2 * ds.rms_rabi);
    const Vec3 b1{om * inv, 0.0, op * inv};
    const Vec3 d1{op * inv, 0.0, -om * inv};
    const Vec3 zero{0.0, 1.0, 0.0};
    const double c = std::cos(ds.theta);
    const double s = std::sin(ds.theta);
    Mat3 u;
    for (std::size_t k = 0; k < 3; ++k) {
        u(k, 0) = c * b1[k] + s * zero[k];   // |g>
        u(k, 1) = d1[k];                     // |d1>
        u(k, 2) = c * zero[k] - s * b1[k];   // |e>
    }
    return u;
}

Mat3 dressed_sz(const DriveParams& drive) {
    const DressedSpin ds = dress(drive);
    const double op = drive.rabi_plus();
    const double om = drive.rabi_minus();
    const double omega2 = ds.rms_rabi * ds.rms_rabi;
    const double w = op * om / omega2;
    const double d = (op * op - om * om) / (2.0 * omega2);
    const double c = std::cos(ds.theta);
    const double s = std::sin(ds.theta);
    Mat3 sz;
    sz(1, 0) = sz(0, 1) = -w * c;
    sz(1, 2) = sz(2, 1) = w * s;
    sz(0, 0) = d * c * c;
    sz(2, 2) = d * s * s;
    sz(0, 2) = sz(2, 0) = -d * c * s;
    sz(1, 1) = -d;
    return sz;
}

}  // namespace nvres
