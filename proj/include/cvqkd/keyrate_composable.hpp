#pragma once

#include "cvqkd/keyrate.hpp"

namespace cvqkd {

struct ComposableParams {
    double n_total = 1e12;
    double eps = 1e-20;      // total security parameter
    double eps_sm = 1e-21;   // smoothing
    double eps_bar = 1e-21;
    double eps_pe = 1e-41;
    double eps_cor = 1e-41;
    double eps_ent = 1e-41;
    double eps_rob = 1e-2;   // robustness bound
    int d_bits = 5;          // discretization bits per measurement
};

struct BudgetCheck {
    bool valid = false;
    double lhs = 0.0;  // 2*eps_sm + eps_bar + (eps_pe + eps_cor + eps_ent)/eps
};

BudgetCheck epsilon_budget_valid(const ComposableParams& p);

struct AepEntCorrections {
    double delta_aep = 0.0;
    double delta_ent = 0.0;
};

/// Delta_AEP = sqrt(N)(d+1)^2 + sqrt(16N)(d+1)log2(2/eps_sm^2)
///           + sqrt(4N)log2(2/(eps^2 eps_sm)) - 4 eps_sm d / eps
/// Delta_ent = log2(1/eps) - sqrt(4N log2^2(2N) log2(2/eps_sm))
/// Logs in Delta_ent are base 2 (see kDentLogBase2); Delta_ent goes
/// negative for large N and is reported as computed.
AepEntCorrections aep_ent_corrections(double n_total, int d_bits, double eps,
                                      double eps_sm);

struct OmegaBounds {
    double omega_a_max = 0.0;
    double omega_b_max = 0.0;
    double omega_c_min = 0.0;
};

/// Confidence bounds on the covariance entries from N pulses at failure
/// probability eps_pe, with the empirical moments taken at their stated
/// restraints ||X||^2 = (N+3sqrt(N))a, ||Y||^2 = (N+3sqrt(N))b,
/// <X,Y> = (N-3sqrt(N))c of the propagated matrix. The logs inside the
/// confidence radicals are natural (see kOmegaLogNatural).
OmegaBounds covariance_confidence_bounds(double n_total, double eps_pe,
                                         const TwoModeCovariance& propagated);

/// K_comp = P * (1 - eps_rob) * { beta*zeta_opt*I_SNR - F(Omega)
///          - (Delta_AEP + Delta_ent + 2 log2(1/(2 eps_bar)))/N }.
/// Mutual information uses the SNR model; F is the Holevo bound on the
/// matrix (Omega_a+1, Omega_b+1, Omega_c). Requires a valid epsilon budget.
KeyRateResult composable_key_rate(const ScenarioParams& sp, const ComposableParams& cp);

// Named log-base choices, flippable for sensitivity studies.
inline constexpr bool kOmegaLogNatural = true;
inline constexpr bool kDentLogBase2 = true;

}  // namespace cvqkd
