#pragma once

#include "cvqkd/covariance.hpp"

namespace cvqkd {

/// Formula-variant switch used across the key-rate stack. `paper_literal`
/// reproduces formulas exactly as published in the source material this
/// library models; `corrected` applies the algebraically consistent form.
enum class FormulaMode { corrected, paper_literal };

/// Photon-subtraction settings: beam-splitter transmittance mu, subtracted
/// photon count j, and the derived squeezing parameter xi = alpha/sqrt(1+alpha^2).
struct SubtractionParams {
    double mu = 1.0;
    int j = 0;
    double xi = 0.0;

    static SubtractionParams make(double alpha, double mu, int j);
};

/// Success probability of subtracting exactly j photons:
/// (1-xi^2)(1-mu)^j xi^(2j) / (1-mu*xi^2)^(j+1).
double subtraction_success_probability(double alpha, const SubtractionParams& sub);

/// Covariance matrix of the j-photon-subtracted two-mode state.
/// X' = (mu*xi^2 + 2j + 1)/(1 - mu*xi^2)
/// Y' = (mu*xi^2*(2j+1) + 1)/(1 - mu*xi^2)
/// Z' = sqrt(mu)*xi*(j+1)/(1 - mu*xi^2)        [paper_literal]
/// Z' = 2*sqrt(mu)*xi*(j+1)/(1 - mu*xi^2)      [corrected]
///
/// The corrected correlation matches an exact Fock-space evaluation of the
/// conditioned state (see tests); the literal one is half of it.
TwoModeCovariance subtracted_covariance(double alpha, const SubtractionParams& sub,
                                        FormulaMode correlation = FormulaMode::paper_literal);

}  // namespace cvqkd
