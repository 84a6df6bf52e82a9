#pragma once

#include "cvqkd/keyrate.hpp"

namespace cvqkd {

struct FiniteSizeParams {
    double n_total = 1e12;      // N, total exchanged signals
    double key_fraction = 0.5;  // n/N used for key
    double eps_pe = 1e-10;
    double eps_pa = 1e-10;
    double eps_bar = 1e-10;
};

/// Privacy-amplification penalty
/// Delta(n) = 7*sqrt(log2(2/eps_bar)/n) + (2/n)*log2(1/eps_pa),
/// with dim H_B = 2 fixed.
double finite_size_correction(double n, double eps_bar, double eps_pa);

struct WorstCaseChannel {
    double t_min = 0.0;
    double sigma2_max = 0.0;
    double sigma2_base = 0.0;   // the m->infinity value of sigma^2
    bool sigma2_negative = false;
};

/// Worst-case channel estimate over m samples at confidence eps_pe:
///   t_min      = sqrt(eta) - z * sqrt(sigma0/(m*x_prime))
///   sigma2_max = sigma0 + z * sqrt(2) * sigma0 / sqrt(m)
/// where sigma0 depends on the SigmaNoiseMode (b_nominal is the nominal
/// propagated Bob variance, used by the `consistent` mode). A negative
/// sigma0 is flagged and the values are still computed.
WorstCaseChannel worst_case_channel(double m, double eta, double epsilon,
                                    double x_prime, double b_nominal,
                                    double eps_pe, SigmaNoiseMode mode);

/// K_fini = (n*P/N) * [beta*zeta_opt*I(A:B) - S_epsPE(E:B) - Delta(n)],
/// with S_epsPE the Holevo bound on the worst-case matrix
/// (X', t_min^2 X' + sigma2_max, t_min Z').
KeyRateResult finite_size_key_rate(const ScenarioParams& sp, const FiniteSizeParams& fp);

}  // namespace cvqkd
