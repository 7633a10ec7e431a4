#pragma once

#include <utility>

#include "nvres/linalg.hpp"
#include "nvres/resonator.hpp"

namespace nvres {

/// Microwave drive of one NV spin. Both Rabi frequencies and the common
/// detuning are angular frequencies (rad/s); rabi_plus/minus = rabi_zero
/// +/- delta_rabi must be positive.
struct DriveParams {
    double rabi_zero;   // Omega_0
    double delta_rabi;  // Delta Omega(B_0)
    double detuning;    // delta (common to both transitions)

    double rabi_plus() const { return rabi_zero + delta_rabi; }
    double rabi_minus() const { return rabi_zero - delta_rabi; }

    /// delta_rabi from a static field along z: mu_B B_0 / hbar.
    static DriveParams with_field(double rabi_zero, double b_field, double detuning);
};

/// Dressed eigensystem of the driven three-level spin. The mixing angle uses
/// the branch 2*theta = atan2(-sqrt(2)*Omega, delta) in (-pi, 0], which is
/// continuous in delta and gives theta = -pi/4 at delta = 0. On this branch
/// |g> = cos(theta)|b1> + sin(theta)|0> and |e> = cos(theta)|0> - sin(theta)|b1>.
struct DressedSpin {
    double theta;     // rad, in (-pi/2, 0]
    double rms_rabi;  // Omega, 2*Omega^2 = Omega_+^2 + Omega_-^2
    double omega_g, omega_d, omega_e;  // rad/s, omega_g < omega_d < omega_e
    double lambda_g = 0.0, lambda_e = 0.0;  // rad/s, absent until couplings computed
};

struct EffectiveCouplings {
    double alpha, beta;      // rad/s
    double delta_1, delta_2; // rad/s
    int n_1, n_3;            // resonator occupation numbers
};

/// Dressed frequencies and mixing angle (couplings left at zero).
DressedSpin dress(const DriveParams& drive);

/// lambda_g = -lambda_1 Omega_+ Omega_- sin(theta)/Omega^2,
/// lambda_e =  lambda_2 Omega_+ Omega_- cos(theta)/Omega^2.
std::pair<double, double> spin_resonator_couplings(const DriveParams& drive, const TipField& tip);

/// dress() plus the couplings filled in.
DressedSpin dress_with_couplings(const DriveParams& drive, const TipField& tip);

/// alpha = lambda_g^2/Delta_1, beta = lambda_e^2/Delta_2 with
/// Delta_1 = Omega_1 - omega_e, Delta_2 = Omega_2 + omega_g. Throws if either
/// detuning is within resonance_floor * Omega_i of zero.
EffectiveCouplings effective_couplings(const DressedSpin& ds, const NormalModes& nm, int n_1,
                                       int n_3, double resonance_floor = 1e-6);

/// (alpha - beta)/(alpha + beta); zero iff the persistent-entanglement tuning
/// alpha = beta is met. Throws on alpha + beta = 0.
double persistent_entanglement_condition(const DressedSpin& ds, const NormalModes& nm);
double persistent_entanglement_residual(double alpha, double beta);

/// Single-spin drive Hamiltonian over the bare basis (|-1>, |0>, |+1>),
/// in units of hbar.
Mat3 bare_hamiltonian(const DriveParams& drive);

/// Columns |g>, |d1>, |e> expressed in the bare basis (|-1>, |0>, |+1>).
Mat3 dressed_basis(const DriveParams& drive);

/// S_z in the dressed basis {|g>, |d1>, |e>}, exact (includes the
/// delta_rabi-induced diagonal and g-e elements on top of the d1-row ones).
Mat3 dressed_sz(const DriveParams& drive);

}  // namespace nvres
