#pragma once

#include <array>
#include <cstdint>

#include "cvqkd/kernels/receiver_kernel.hpp"

namespace cvqkd {

struct DiscriminationConfig {
    double mean_photon = 1.0;  // <n> = |alpha|^2 of the discriminated field
    int stages = 10;           // M adaptive measurements
    std::uint64_t trials = 100000;
    std::uint64_t seed = 42;
    double detector_efficiency = 1.0;
    kernels::KernelChoice kernel = kernels::KernelChoice::automatic;
};

struct DiscriminationResult {
    double p_sql = 0.0;
    double p_hel = 0.0;
    double p_rec = 0.0;
    double p_rec_stderr = 0.0;
    double zeta = 0.0;      // (1 - p_rec)/(1 - p_sql)
    double zeta_opt = 0.0;  // (1 - p_hel)/(1 - p_sql)
    std::uint64_t errors = 0;
    std::uint64_t trials = 0;
};

/// Standard quantum limit for QPSK discrimination by ideal coherent
/// detection: 1 - [1 - erfc(sqrt(<n>/2))/2]^2.
double sql_error(double mean_photon);

/// Gram-matrix eigenvalues of the QPSK ensemble (square-root measurement).
/// Real up to a 1e-9 imaginary residue; their sum is 4.
std::array<double, 4> gram_eigenvalues(double mean_photon);

/// Helstrom bound approximated by the square-root measurement:
/// 1 - (sum_k sqrt(w_k))^2 / 16.
double helstrom_srm_error(double mean_photon);

/// One Bayesian update of the four-state posterior given `observed_count`
/// photons after displacing by candidate `candidate_index`, where
/// stage_energy is the undisplaced per-slice mean photon number.
std::array<double, 4> bayesian_update(const std::array<double, 4>& prior,
                                      int candidate_index, int observed_count,
                                      double stage_energy);

/// Monte Carlo simulation of the M-stage adaptive receiver. Bit-identical
/// for fixed (seed, trials, stages) regardless of parallelism or kernel.
DiscriminationResult simulate_adaptive_receiver(const DiscriminationConfig& cfg);

}  // namespace cvqkd
