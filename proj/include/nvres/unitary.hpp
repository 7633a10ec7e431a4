#pragma once

#include <optional>
#include <utility>

#include "nvres/entanglement.hpp"
#include "nvres/linalg.hpp"

namespace nvres {

/// Pure two-spin state, amplitudes a1..a9 over the same product-basis
/// ordering as DensityMatrix. Norm is checked at construction; the closed-form
/// evolution is phase-only and preserves it exactly.
class TwoSpinState {
  public:
    static TwoSpinState from_amplitudes(const Vec9& amps);  // requires unit norm (1e-12)
    static TwoSpinState normalized(Vec9 amps);              // rescales, throws on zero vector

    const Vec9& amps() const { return a_; }
    const cplx& operator[](std::size_t i) const { return a_[i]; }

  private:
    explicit TwoSpinState(const Vec9& a) : a_(a) {}
    Vec9 a_;
};

struct EvolutionParams {
    double alpha, beta;  // effective couplings (any consistent inverse-time unit)
    int n_1 = 0, n_3 = 0;
};

/// Closed-form solution of the nine amplitude equations at time t.
TwoSpinState evolve(const TwoSpinState& state0, const EvolutionParams& p, double t);

/// Rank-1 projector |state><state|.
DensityMatrix density(const TwoSpinState& state);

/// N(t) for the a2(0)=a6(0)=1/sqrt(2) initial state:
/// sqrt(6 - cos4at - cos4bt + 2cos2(a-b)t + 2cos2(a+b)t) / (4 sqrt 2).
double negativity_closed_form(double alpha, double beta, double t);

/// If alpha/beta is (numerically) a reduced rational p/q with p and q of
/// opposite parity, returns integers (n, m) with alpha/beta = (n+m+1)/(n-m);
/// such ratios are exactly the ones whose negativity reaches zero. Detection
/// uses continued fractions with tolerance 1e-9 and denominators up to 1000.
std::optional<std::pair<long long, long long>> zero_negativity_ratio_check(double alpha,
                                                                           double beta);

/// The piecewise closed form (4/9)(|sin at| - sin at) quoted for the
/// all-amplitudes-1/3 state at alpha = beta: 0 on [2k pi/a, (2k+1) pi/a] and
/// (8/9)|sin at| between. NOTE: the evolved-state pipeline for that state
/// yields (4/9)|sin at| instead (see tests); this evaluator reproduces the
/// quoted formula, not the pipeline.
double equal_superposition_negativity(double alpha, double t);

/// a2 = a6 = 1/sqrt(2), all other amplitudes zero.
TwoSpinState pair_superposition_state();
/// all nine amplitudes 1/3.
TwoSpinState equal_superposition_state();

}  // namespace nvres
