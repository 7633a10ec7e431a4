#pragma once

#include <span>

#include "nvres/lindblad.hpp"

namespace nvres {

/// One print-source correction applied during transcription of the
/// closed-form solution; every entry was adjudicated against the numerical
/// integrator (see cross_validate and the corresponding tests).
struct TranscriptionNote {
    const char* element;
    const char* printed;
    const char* implemented;
};

/// Closed-form evaluation of all 81 matrix elements of the damped two-spin
/// evolution at time t, given the initial matrix rho0. Valid for any
/// alpha, beta and gamma_e, gamma_d >= 0 (feed terms carry their rate as a
/// prefactor and are skipped when the rate is zero, which removes the
/// otherwise-degenerate denominators).
Mat9 appendix_eval(const Mat9& rho0, double alpha, double beta, const DecayRates& rates, double t);

std::span<const TranscriptionNote> transcription_notes();

}  // namespace nvres
