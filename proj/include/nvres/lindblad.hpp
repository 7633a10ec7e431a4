#pragma once

#include <vector>

#include "nvres/entanglement.hpp"
#include "nvres/linalg.hpp"

namespace nvres {

struct DecayRates {
    double gamma_e;  // |3> -> |1>
    double gamma_d;  // |2> -> |1>
};

/// Immutable two-spin Lindblad model: d rho/dt = -i[V, rho] + L rho with the
/// exchange interaction V = -alpha(R12 x R21 + R21 x R12) - beta(R23 x R32 +
/// R32 x R23) and one decay channel per spin per excited level.
class LindbladSystem {
  public:
    LindbladSystem(double alpha, double beta, DecayRates rates);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    const DecayRates& rates() const { return rates_; }
    const Mat9& v_hat() const { return v_; }

    /// Jump operators with their rates: (gamma_e, R13 x I), (gamma_d, R12 x I)
    /// and the spin-2 mirrors.
    struct Channel {
        double rate;
        Mat9 op;
    };
    const std::array<Channel, 4>& channels() const { return channels_; }

  private:
    double alpha_, beta_;
    DecayRates rates_;
    Mat9 v_;
    std::array<Channel, 4> channels_;
};

/// Right-hand side -i[V,rho] + sum dissipators; traceless and
/// Hermiticity-preserving for Hermitian rho.
Mat9 rhs(const LindbladSystem& sys, const Mat9& rho);

struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    std::vector<double> negativities;
    int renormalizations = 0;  // stored states re-hermitized/renormalized past drift 1e-9
};

/// Fixed-step classical RK4 integration, storing n_store evenly spaced
/// points including t = 0 and t_end. Throws if any stored state has an
/// eigenvalue below -1e-6 (integration-quality error: reduce dt).
Trajectory integrate(const LindbladSystem& sys, const DensityMatrix& rho0, double t_end, double dt,
                     std::size_t n_store = 201);

/// Same, storing at the given ascending times (t >= 0).
Trajectory integrate_at(const LindbladSystem& sys, const DensityMatrix& rho0,
                        const std::vector<double>& times, double dt);

/// dt = 1e-3 / max(alpha, beta, gamma_e, gamma_d, 1).
double default_dt(const LindbladSystem& sys);

/// Halve-and-compare step check: integrates to t_end with dt and dt/2 and
/// returns the max-norm difference of the final states.
double step_convergence(const LindbladSystem& sys, const DensityMatrix& rho0, double t_end,
                        double dt);

}  // namespace nvres
