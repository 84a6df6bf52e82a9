#include "cvqkd/subtraction.hpp"

#include <cmath>
#include <stdexcept>

namespace cvqkd {

SubtractionParams SubtractionParams::make(double alpha, double mu, int j) {
    if (!std::isfinite(alpha) || alpha < 0.0)
        throw std::domain_error("subtraction: alpha must be finite and >= 0");
    if (!(mu > 0.0) || mu > 1.0)
        throw std::domain_error("subtraction: mu must be in (0, 1]");
    if (j < 0) throw std::domain_error("subtraction: j must be >= 0");
    const double xi = alpha / std::sqrt(1.0 + alpha * alpha);
    return {mu, j, xi};
}

static double check_denominator(const SubtractionParams& sub) {
    const double mx2 = sub.mu * sub.xi * sub.xi;
    if (mx2 >= 1.0)
        throw std::domain_error("subtraction: mu*xi^2 >= 1 (divergent series)");
    return 1.0 - mx2;
}

double subtraction_success_probability(double alpha, const SubtractionParams& sub) {
    const double den = check_denominator(sub);
    const double xi2 = sub.xi * sub.xi;
    const double one_minus_xi2 = 1.0 / (1.0 + alpha * alpha);
    double p = one_minus_xi2 * std::pow(1.0 - sub.mu, sub.j) * std::pow(xi2, sub.j) /
               std::pow(den, sub.j + 1);
    return p;
}

TwoModeCovariance subtracted_covariance(double alpha, const SubtractionParams& sub,
                                        FormulaMode correlation) {
    (void)alpha;
    const double den = check_denominator(sub);
    const double mx2 = sub.mu * sub.xi * sub.xi;
    const double j = static_cast<double>(sub.j);
    TwoModeCovariance cov;
    cov.a = (mx2 + 2.0 * j + 1.0) / den;
    cov.b = (mx2 * (2.0 * j + 1.0) + 1.0) / den;
    cov.c = std::sqrt(sub.mu) * sub.xi * (j + 1.0) / den;
    if (correlation == FormulaMode::corrected) cov.c *= 2.0;
    return cov;
}

}  // namespace cvqkd
