#include "nvres/unitary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nvres {

TwoSpinState TwoSpinState::from_amplitudes(const Vec9& amps) {
    const double n = norm(amps);
    if (std::abs(n - 1.0) > 1e-12)
        throw std::domain_error("TwoSpinState: amplitudes are not normalized");
    return TwoSpinState(amps);
}

TwoSpinState TwoSpinState::normalized(Vec9 amps) {
    const double n = norm(amps);
    if (n == 0.0) throw std::domain_error("TwoSpinState: zero vector");
    for (auto& x : amps) x /= n;
    return TwoSpinState(amps);
}

TwoSpinState evolve(const TwoSpinState& s0, const EvolutionParams& p, double t) {
    if (p.n_1 < 0 || p.n_3 < 0) throw std::domain_error("evolve: occupations must be >= 0");
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(t))
        throw std::domain_error("evolve: non-finite input");
    const double al = p.alpha, be = p.beta;
    const double n1 = p.n_1, n3 = p.n_3;
    const auto phase = [t](double w) { return std::polar(1.0, w * t); };

    const Vec9& a = s0.amps();
    const cplx c2 = 0.5 * (a[1] - a[3]);
    const cplx c4 = 0.5 * (a[1] + a[3]);
    const cplx c6 = 0.5 * (a[5] - a[7]);
    const cplx c8 = 0.5 * (a[5] + a[7]);

    const cplx e_bn3 = phase(-be * n3);
    const cplx e_2a = phase(2.0 * al - be * n3);
    const cplx e_37 = phase(-(al * n1 - be * (n3 + 1.0)));
    const cplx e_a1 = phase(al * (n1 + 1.0));
    const cplx e_2b = phase(2.0 * be + al * (n1 + 1.0));

    Vec9 out;
    out[0] = a[0] * phase(-2.0 * al * n1);
    out[1] = c2 * e_bn3 + c4 * e_2a;
    out[2] = a[2] * e_37;
    out[3] = -c2 * e_bn3 + c4 * e_2a;
    out[4] = a[4] * phase(2.0 * (al * (n1 + 1.0) - be * n3));
    out[5] = c6 * e_a1 + c8 * e_2b;
    out[6] = a[6] * e_37;
    out[7] = -c6 * e_a1 + c8 * e_2b;
    out[8] = a[8] * phase(2.0 * be * (n3 + 1.0));
    return TwoSpinState::from_amplitudes(out);
}

DensityMatrix density(const TwoSpinState& state) {
    return DensityMatrix::from_matrix(outer(state.amps(), state.amps()), 1e-12);
}

double negativity_closed_form(double alpha, double beta, double t) {
    const double r = 6.0 - std::cos(4.0 * alpha * t) - std::cos(4.0 * beta * t) +
                     2.0 * std::cos(2.0 * (alpha - beta) * t) +
                     2.0 * std::cos(2.0 * (alpha + beta) * t);
    return std::sqrt(std::max(r, 0.0)) / (4.0 * std::numbers::sqrt2);
}

namespace {

/// Best rational p/q for x with q <= q_cap and |x - p/q| <= tol, via the
/// continued-fraction convergents; nullopt if none qualifies.
std::optional<std::pair<long long, long long>> to_rational(double x, double tol, long long q_cap) {
    if (!(x > 0.0) || !std::isfinite(x)) return std::nullopt;
    long long p_prev = 1, q_prev = 0;
    long long p_cur = static_cast<long long>(std::floor(x));
    long long q_cur = 1;
    double frac = x - std::floor(x);
    for (int it = 0; it < 64; ++it) {
        if (std::abs(x - static_cast<double>(p_cur) / static_cast<double>(q_cur)) <= tol)
            return std::make_pair(p_cur, q_cur);
        if (frac == 0.0) break;
        const double inv = 1.0 / frac;
        const long long digit = static_cast<long long>(std::floor(inv));
        frac = inv - std::floor(inv);
        const long long p_next = digit * p_cur + p_prev;
        const long long q_next = digit * q_cur + q_prev;
        if (q_next > q_cap) break;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::pair<long long, long long>> zero_negativity_ratio_check(double alpha,
                                                                           double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::domain_error("zero_negativity_ratio_check: couplings must be > 0");
    const auto pq = to_rational(alpha / beta, 1e-9, 1000);
    if (!pq) return std::nullopt;
    const auto [p, q] = *pq;
    if ((p + q) % 2 == 0) return std::nullopt;  // same parity: no zeros
    const long long n = (p + q - 1) / 2;
    const long long m = (p - q - 1) / 2;
    if ((n + m + 1) * q != (n - m) * p)
        throw std::logic_error("zero_negativity_ratio_check: witness identity violated");
    return std::make_pair(n, m);
}

double equal_superposition_negativity(double alpha, double t) {
    if (!(alpha > 0.0)) throw std::domain_error("equal_superposition_negativity: alpha must be > 0");
    const double s = std::sin(alpha * t);
    return (4.0 / 9.0) * (std::abs(s) - s);
}

TwoSpinState pair_superposition_state() {
    Vec9 a{};
    a[1] = a[5] = 1.0 / std::numbers::sqrt2;
    return TwoSpinState::from_amplitudes(a);
}

TwoSpinState equal_superposition_state() {
    Vec9 a;
    a.fill(cplx{1.0 / 3.0, 0.0});
    return TwoSpinState::from_amplitudes(a);
}

}  // namespace nvres
