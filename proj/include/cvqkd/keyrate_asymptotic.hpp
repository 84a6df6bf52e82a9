#pragma once

#include "cvqkd/keyrate.hpp"

namespace cvqkd {

/// Von Neumann entropy kernel G(x) = (x+1)log2(x+1) - x log2 x, G(0) = 0.
double von_neumann_g(double x);

/// Shannon mutual information from the propagated covariance matrix with
/// Alice heterodyning and Bob homodyning, reverse reconciliation.
/// corrected:     V_A|B = (a+1)/2 - c^2/(2b)
/// paper_literal: V_A|B = a - c^2/(2b)
double mutual_information(const TwoModeCovariance& propagated, FormulaMode mode);

/// SNR-model mutual information 0.5*log2(1 + eta*v_mod/(2 + eta*epsilon)).
double mutual_information_snr(double eta, double v_mod, double epsilon);

struct SymplecticSpectrum {
    double kappa1 = 1.0, kappa2 = 1.0, kappa3 = 1.0, kappa4 = 1.0;
    double inv_a = 0.0, inv_b = 0.0, inv_c = 0.0, inv_d = 0.0;  // A, B, C, D
};

struct HolevoResult {
    double s_eb = 0.0;
    SymplecticSpectrum spectrum;
};

/// Holevo bound S(E:B) under reverse reconciliation, computed from the
/// covariance matrix after the channel (detector noise enters through the
/// noise budget only).
///
/// corrected mode (valid for asymmetric a != b matrices):
///   A = a^2 + b^2 - 2c^2, B = (ab - c^2)^2,
///   C = (A*chi_hom + a*sqrt(B) + b)/(b + chi_hom),
///   D = sqrt(B)*(a + sqrt(B)*chi_hom)/(b + chi_hom)
/// paper_literal mode substitutes V = a throughout the published forms.
HolevoResult holevo_bound(const TwoModeCovariance& after_channel,
                          const NoiseBudget& noise, FormulaMode mode);

/// Source state and subtraction success probability for a scenario.
struct SourceState {
    TwoModeCovariance cov;
    double success_probability = 1.0;
};
SourceState build_source(const ScenarioParams& sp);

/// K_asym = P_(j) * [beta * zeta_opt * I(A:B) - S(E:B)]. Negative rates are
/// reported as-is with feasible = false.
KeyRateResult asymptotic_key_rate(const ScenarioParams& sp);

}  // namespace cvqkd
