#include "cvqkd/covariance.hpp"

#include <algorithm>
#include <cmath>

namespace cvqkd {

std::pair<double, double> TwoModeCovariance::symplectic_eigenvalues() const {
    const double d = delta();
    const double dt = determinant();
    const double disc = std::max(d * d - 4.0 * dt, 0.0);
    const double root = std::sqrt(disc);
    const double lo = std::sqrt(std::max(0.5 * (d - root), 0.0));
    const double hi = std::sqrt(std::max(0.5 * (d + root), 0.0));
    return {lo, hi};
}

bool TwoModeCovariance::is_physical(double tol) const {
    if (a < 1.0 - tol || b < 1.0 - tol) return false;
    return symplectic_eigenvalues().first >= 1.0 - tol;
}

}  // namespace cvqkd
