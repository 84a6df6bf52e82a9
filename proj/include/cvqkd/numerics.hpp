#pragma once

namespace cvqkd {

/// Standard complementary error function (thin wrapper, domain-checked).
double erfc(double x);

/// Upper-tail standard-normal quantile: returns z >= 0 such that
/// erfc(z/sqrt(2))/2 == p, for p in (0, 0.5]. Absolute accuracy well
/// below 1e-9 (safeguarded Newton on erfc).
double inverse_normal_tail(double p);

/// Tail probability erfc(z/sqrt(2))/2, the inverse of the above.
double normal_tail(double z);

}  // namespace cvqkd
