#pragma once

#include <cstdint>

namespace cvqkd {

/// Counter-based splittable stream: (seed, stream_id) fully determines the
/// sequence, so per-trial substreams are reproducible regardless of thread
/// scheduling. Core step is the splitmix64 finalizer.
struct RngStream {
    std::uint64_t state;

    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double();
};

/// Derive a child seed from (seed, salt); used to give independent sweeps
/// and figure points their own seed domains.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

/// Exact Poisson sample. Sequential inversion for rate < 16; larger rates
/// are split into independent chunks (Poisson additivity), which stays
/// exact without tuned rejection constants. rate = 0 always yields 0.
int poisson_sample(double rate, RngStream& rng);

}  // namespace cvqkd
