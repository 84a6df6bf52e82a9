#pragma once

#include <utility>

namespace cvqkd {

/// Two-mode covariance matrix of the block form
///   [ a*I   c*sz ]
///   [ c*sz  b*I  ]
/// with I = diag(1,1) and sz = diag(1,-1), in shot-noise units.
/// Only the (a, b, c) triple is stored.
struct TwoModeCovariance {
    double a = 1.0;
    double b = 1.0;
    double c = 0.0;

    // Symplectic invariants: delta = a^2 + b^2 - 2c^2, det = (ab - c^2)^2.
    double delta() const { return a * a + b * b - 2.0 * c * c; }
    double determinant() const {
        const double d = a * b - c * c;
        return d * d;
    }

    /// Symplectic eigenvalues {nu_minus, nu_plus}. Tiny negative
    /// discriminants from cancellation are clamped to zero.
    std::pair<double, double> symplectic_eigenvalues() const;

    /// Physicality: nu_minus >= 1 - tol (Heisenberg bound).
    bool is_physical(double tol = 1e-9) const;
};

}  // namespace cvqkd
