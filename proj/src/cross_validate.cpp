#include "nvres/cross_validate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nvres {

ValidationReport cross_validate(const LindbladSystem& sys, const DensityMatrix& rho0,
                                const std::vector<double>& t_grid, double flag_threshold) {
    if (t_grid.empty()) throw std::invalid_argument("cross_validate: empty time grid");
    if (!std::is_sorted(t_grid.begin(), t_grid.end()) || t_grid.front() < 0.0)
        throw std::invalid_argument("cross_validate: time grid must be ascending and non-negative");

    ValidationReport rep;
    rep.flag_threshold = flag_threshold;
    rep.integrator_step = default_dt(sys);
    rep.step_check = step_convergence(sys, rho0, t_grid.back(), rep.integrator_step);

    const Trajectory traj = integrate_at(sys, rho0, t_grid, rep.integrator_step);

    std::array<double, 81> worst{};
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const double t = traj.times[k];
        const Mat9 closed = appendix_eval(rho0.matrix(), sys.alpha(), sys.beta(), sys.rates(), t);
        const Mat9& num = traj.states[k].matrix();
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < 9; ++j)
                worst[9 * i + j] = std::max(worst[9 * i + j], std::abs(closed(i, j) - num(i, j)));
    }

    rep.elements.reserve(81);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            const double e = worst[static_cast<std::size_t>(9 * i + j)];
            const ElementDiscrepancy d{i + 1, j + 1, e, e > flag_threshold};
            rep.elements.push_back(d);
            if (d.flagged) rep.flagged.push_back(d);
            rep.worst_err = std::max(rep.worst_err, e);
        }
    return rep;
}

}  // namespace nvres
