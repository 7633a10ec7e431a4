#include "nvres/lindblad.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nvres/jacobi.hpp"

namespace nvres {

LindbladSystem::LindbladSystem(double alpha, double beta, DecayRates rates)
    : alpha_(alpha), beta_(beta), rates_(rates) {
    if (rates.gamma_e < 0.0 || rates.gamma_d < 0.0)
        throw std::domain_error("LindbladSystem: decay rates must be >= 0");
    const Mat3 i3 = Mat3::identity();
    const auto on_1 = [&](int i, int j) { return kron(qutrit_op(i, j), i3); };
    const auto on_2 = [&](int i, int j) { return kron(i3, qutrit_op(i, j)); };

    v_ = cplx{-alpha} * (on_1(1, 2) * on_2(2, 1) + on_1(2, 1) * on_2(1, 2)) +
         cplx{-beta} * (on_1(2, 3) * on_2(3, 2) + on_1(3, 2) * on_2(2, 3));

    channels_ = {Channel{rates.gamma_e, on_1(1, 3)}, Channel{rates.gamma_d, on_1(1, 2)},
                 Channel{rates.gamma_e, on_2(1, 3)}, Channel{rates.gamma_d, on_2(1, 2)}};
}

Mat9 rhs(const LindbladSystem& sys, const Mat9& rho) {
    Mat9 d = cplx{0.0, -1.0} * (sys.v_hat() * rho - rho * sys.v_hat());
    for (const auto& ch : sys.channels()) {
        if (ch.rate == 0.0) continue;
        const Mat9 jdag = ch.op.adjoint();
        const Mat9 jj = jdag * ch.op;
        d += cplx{0.5 * ch.rate} * (cplx{2.0} * (ch.op * rho) * jdag - jj * rho - rho * jj);
    }
    return d;
}

namespace {

Mat9 rk4_step(const LindbladSystem& sys, const Mat9& rho, double h) {
    const Mat9 k1 = rhs(sys, rho);
    const Mat9 k2 = rhs(sys, rho + cplx{0.5 * h} * k1);
    const Mat9 k3 = rhs(sys, rho + cplx{0.5 * h} * k2);
    const Mat9 k4 = rhs(sys, rho + cplx{h} * k3);
    return rho + cplx{h / 6.0} * (k1 + cplx{2.0} * k2 + cplx{2.0} * k3 + k4);
}

Mat9 advance(const LindbladSystem& sys, Mat9 rho, double t_span, double dt) {
    const auto steps = static_cast<std::size_t>(std::ceil(t_span / dt - 1e-12));
    const double h = t_span / static_cast<double>(std::max<std::size_t>(steps, 1));
    for (std::size_t i = 0; i < steps; ++i) rho = rk4_step(sys, rho, h);
    return rho;
}

}  // namespace

Trajectory integrate(const LindbladSystem& sys, const DensityMatrix& rho0, double t_end, double dt,
                     std::size_t n_store) {
    if (!(t_end >= 0.0)) throw std::domain_error("integrate: t_end must be >= 0");
    n_store = std::max<std::size_t>(n_store, 2);
    std::vector<double> times(n_store);
    for (std::size_t k = 0; k < n_store; ++k)
        times[k] = t_end * static_cast<double>(k) / static_cast<double>(n_store - 1);
    return integrate_at(sys, rho0, times, dt);
}

Trajectory integrate_at(const LindbladSystem& sys, const DensityMatrix& rho0,
                        const std::vector<double>& times, double dt) {
    if (!(dt > 0.0)) throw std::domain_error("integrate: dt must be > 0");
    const double rate_scale = std::max(
        {std::abs(sys.alpha()), std::abs(sys.beta()), sys.rates().gamma_e, sys.rates().gamma_d});
    if (!(dt * rate_scale < 0.1))
        throw std::domain_error("integrate: dt too large for the fastest rate (dt*rate >= 0.1)");
    if (times.empty() || !std::is_sorted(times.begin(), times.end()) || times.front() < 0.0)
        throw std::domain_error("integrate: store times must be ascending and non-negative");

    Trajectory traj;
    traj.times.reserve(times.size());
    traj.states.reserve(times.size());
    traj.negativities.reserve(times.size());

    Mat9 rho = rho0.matrix();
    double t_prev = 0.0;
    for (const double t_k : times) {
        if (t_k > t_prev) {
            rho = advance(sys, rho, t_k - t_prev, dt);
            t_prev = t_k;
        }

        Mat9 stored = rho;
        const double herm_drift = stored.hermiticity_defect();
        const double trace_drift = std::abs(stored.trace() - cplx{1.0});
        if (herm_drift > 1e-9 || trace_drift > 1e-9) {
            stored = stored.hermitized();
            const double tr = stored.trace().real();
            stored *= cplx{1.0 / tr};
            ++traj.renormalizations;
        } else {
            stored = stored.hermitized();  // keep the exact symmetry for downstream eigensolves
        }

        const auto eig = hermitian_eigensystem(stored);
        if (eig.values[0] < -1e-6)
            throw std::runtime_error(
                "integrate: positivity violated (min eigenvalue " +
                std::to_string(eig.values[0]) + "); reduce dt");

        traj.times.push_back(t_k);
        traj.states.push_back(DensityMatrix::from_matrix(stored, 1e-6));
        traj.negativities.push_back(negativity_raw(stored).value);
    }
    return traj;
}

double default_dt(const LindbladSystem& sys) {
    return 1e-3 / std::max({std::abs(sys.alpha()), std::abs(sys.beta()), sys.rates().gamma_e,
                            sys.rates().gamma_d, 1.0});
}

double step_convergence(const LindbladSystem& sys, const DensityMatrix& rho0, double t_end,
                        double dt) {
    const Mat9 a = advance(sys, rho0.matrix(), t_end, dt);
    const Mat9 b = advance(sys, rho0.matrix(), t_end, 0.5 * dt);
    return (a - b).max_abs();
}

}  // namespace nvres
