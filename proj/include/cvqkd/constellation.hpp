#pragma once

#include <array>

#include "cvqkd/covariance.hpp"

namespace cvqkd {

/// Amplitude of the QPSK constellation. The modulation variance and the
/// coherent amplitude are locked together by v_mod = 2*alpha^2.
struct ConstellationParams {
    double alpha = 0.0;
    double v_mod = 0.0;

    static ConstellationParams from_alpha(double alpha);
    static ConstellationParams from_v_mod(double v_mod);
};

/// Closed-form weights [l0, l1, l2, l3] of the four-component decomposition
/// of the QPSK ensemble. Nonnegative, sum to one.
std::array<double, 4> lambda_coefficients(const ConstellationParams& p);

/// Correlation entry Z4 of the entangled two-mode source state. Defined as
/// the limit 0 at alpha = 0.
double correlation_z4(const ConstellationParams& p);

/// Covariance matrix of the two-mode source: a = b = 1 + 2*alpha^2, c = Z4.
TwoModeCovariance epr_covariance(const ConstellationParams& p);

}  // namespace cvqkd
