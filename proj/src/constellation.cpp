#include "cvqkd/constellation.hpp"

#include <cmath>
#include <stdexcept>

#include "cvqkd/errors.hpp"

namespace cvqkd {

ConstellationParams ConstellationParams::from_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0)
        throw std::domain_error("constellation: alpha must be finite and >= 0");
    return {alpha, 2.0 * alpha * alpha};
}

ConstellationParams ConstellationParams::from_v_mod(double v_mod) {
    if (!std::isfinite(v_mod) || v_mod < 0.0)
        throw std::domain_error("constellation: v_mod must be finite and >= 0");
    return {std::sqrt(v_mod / 2.0), v_mod};
}

std::array<double, 4> lambda_coefficients(const ConstellationParams& p) {
    if (!std::isfinite(p.alpha) || p.alpha < 0.0)
        throw std::domain_error("lambda_coefficients: alpha must be finite and >= 0");
    const double a = p.alpha * p.alpha;
    // Stable equivalents of (1/2)e^{-a}[cosh(a) +- cos(a)] and
    // (1/2)e^{-a}[sinh(a) +- sin(a)]: expm1 keeps the sinh/cos cancellation
    // accurate at small a, where l2 ~ a^2/2 and l3 ~ a^3/6.
    const double em2a = std::exp(-2.0 * a);
    const double ema = std::exp(-a);
    const double cosh_term = 0.25 * (1.0 + em2a);
    const double sinh_term = -0.25 * std::expm1(-2.0 * a);
    const double cos_term = 0.5 * ema * std::cos(a);
    const double sin_term = 0.5 * ema * std::sin(a);
    std::array<double, 4> lam{cosh_term + cos_term, sinh_term + sin_term,
                              cosh_term - cos_term, sinh_term - sin_term};
    for (double& l : lam) l = std::max(l, 0.0);  // clamp cancellation residue
    return lam;
}

double correlation_z4(const ConstellationParams& p) {
    if (!std::isfinite(p.alpha)) throw std::domain_error("correlation_z4: non-finite alpha");
    const double a = p.alpha * p.alpha;
    if (a == 0.0) return 0.0;  // removable singularity
    const auto lam = lambda_coefficients(p);
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
        const double num = lam[(k + 3) & 3];  // lambda_{k-1 mod 4}
        const double den = lam[k];
        if (num == 0.0) continue;  // limiting value of the term is 0
        sum += num * std::sqrt(num) / std::sqrt(den);
    }
    return 2.0 * a * sum;
}

TwoModeCovariance epr_covariance(const ConstellationParams& p) {
    const double x = 1.0 + 2.0 * p.alpha * p.alpha;
    return {x, x, correlation_z4(p)};
}

}  // namespace cvqkd
