#pragma once

#include <cstdint>

namespace cvqkd::kernels {

/// Per-run constants of the adaptive receiver trial loop.
/// stage_energy is the undisplaced mean photon number per time slice,
/// i.e. mean_photon/stages scaled by the detector efficiency.
struct ReceiverParams {
    double stage_energy = 0.0;
    int stages = 10;
    std::uint64_t seed = 0;
};

/// Runs trials [first, first+count). Returns the number of wrong final
/// decisions, or UINT64_MAX on a numerical-consistency failure.
/// decisions/truths, when non-null, receive one byte per trial.
///
/// Contract: every kernel variant produces bit-identical results for the
/// same (params, first, count); the equivalence suite enforces this.
using ReceiverKernelFn = std::uint64_t (*)(const ReceiverParams& params,
                                           std::uint64_t first, std::uint64_t count,
                                           std::uint8_t* decisions, std::uint8_t* truths);

std::uint64_t run_trials_scalar(const ReceiverParams& params, std::uint64_t first,
                                std::uint64_t count, std::uint8_t* decisions,
                                std::uint8_t* truths);

#if defined(__x86_64__)
std::uint64_t run_trials_avx2(const ReceiverParams& params, std::uint64_t first,
                              std::uint64_t count, std::uint8_t* decisions,
                              std::uint8_t* truths);
#endif

enum class KernelChoice { automatic, scalar, avx2 };

bool cpu_has_avx2();

struct SelectedKernel {
    ReceiverKernelFn fn;
    const char* name;
};

/// Resolve the kernel at runtime. `automatic` picks AVX2 when the CPU
/// supports it; requesting avx2 on an unsupported CPU is an error.
SelectedKernel select_receiver_kernel(KernelChoice choice);

}  // namespace cvqkd::kernels
