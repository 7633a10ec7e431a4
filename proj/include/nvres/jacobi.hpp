#pragma once

#include <array>
#include <cstddef>

#include "nvres/linalg.hpp"

namespace nvres {

template <std::size_t N>
struct EigenSystem {
    std::array<double, N> values;  // ascending
    CMat<N> vectors;               // columns are the matching eigenvectors
};

namespace detail {

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
/// Converges when the off-diagonal Frobenius norm drops below
/// off_tol_rel * ||m||_F; hard cap of max_sweeps sweeps.
template <std::size_t N>
EigenSystem<N> jacobi_hermitian(CMat<N> m, double off_tol_rel = 1e-13, int max_sweeps = 100) {
    CMat<N> v = CMat<N>::identity();
    const double target = off_tol_rel * m.frobenius_norm();

    auto off_norm = [&]() {
        double s = 0;
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) s += 2.0 * std::norm(m(p, q));
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < max_sweeps && off_norm() > target; ++sweep) {
        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double b = std::abs(m(p, q));
                if (b == 0.0) continue;
                // phase u makes the pivot real: conj(u)*m(p,q) = b
                const cplx u = m(p, q) / b;
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                const double tau = (aqq - app) / (2.0 * b);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // columns: [p q] <- [p q] * [[c, s*u], [-s*conj(u), c*?]] folded below
                for (std::size_t k = 0; k < N; ++k) {
                    const cplx mkp = m(k, p);
                    const cplx mkq = m(k, q) * std::conj(u);
                    m(k, p) = c * mkp - s * mkq;
                    m(k, q) = s * mkp + c * mkq;
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q) * std::conj(u);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const cplx mpk = m(p, k);
                    const cplx mqk = m(q, k) * u;
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = s * mpk + c * mqk;
                }
                m(p, q) = std::conj(m(q, p));  // clamp round-off on the zeroed pivot
            }
        }
    }

    EigenSystem<N> out;
    std::array<std::size_t, N> order{};
    for (std::size_t i = 0; i < N; ++i) order[i] = i;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (m(order[j], order[j]).real() < m(order[i], order[i]).real()) std::swap(order[i], order[j]);
    for (std::size_t i = 0; i < N; ++i) {
        out.values[i] = m(order[i], order[i]).real();
        for (std::size_t k = 0; k < N; ++k) out.vectors(k, i) = v(k, order[i]);
    }
    return out;
}

}  // namespace detail

/// Eigen-decomposition of a Hermitian matrix; throws if the input is not
/// Hermitian to within hermitian_tol (absolute, entrywise).
template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const CMat<N>& m, double hermitian_tol = 1e-10);

extern template EigenSystem<3> hermitian_eigensystem<3>(const CMat<3>&, double);
extern template EigenSystem<9> hermitian_eigensystem<9>(const CMat<9>&, double);

}  // namespace nvres
